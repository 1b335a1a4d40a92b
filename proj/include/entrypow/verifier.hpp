#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrypow/graph.hpp"
#include "entrypow/hset.hpp"
#include "entrypow/sym_matrix.hpp"

namespace entrypow {

enum class SampleStrategy { clique_sum, witness_bank, mixed };

SampleStrategy strategy_from_string(const std::string& name);
std::string to_string(SampleStrategy s);

struct SampleConfig {
  std::uint64_t seed = 0;
  long trials = 1000;
  SampleStrategy strategy = SampleStrategy::mixed;
  double entry_scale = 1.0;
  int vertex_cap = kDefaultVertexCap;
};

// Deterministic splitmix64 stream; every consumer derives its own stream
// from (seed, stream id) so trial order never matters.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next_u64();
  double uniform01();  // [0, 1)
  double normal();
  int uniform_int(int lo, int hi);  // inclusive

 private:
  std::uint64_t state_;
};

// Clique-sum sampler for P_G: one random low-rank Gram block per maximal
// clique, embedded at the clique positions. The nonnegative variant squares
// the factor entries.
class ConeSampler {
 public:
  ConeSampler(const Graph& g, SampleConfig cfg);

  struct Params {
    std::vector<int> ranks;       // per clique
    std::vector<double> entries;  // factor entries, clique-major
  };

  Params draw(long trial) const;
  SymMatrix assemble(const Params& p, bool nonneg) const;
  SymMatrix sample(long trial, bool nonneg) const;
  const std::vector<std::vector<int>>& cliques() const { return cliques_; }

 private:
  const Graph* g_;
  SampleConfig cfg_;
  std::vector<std::vector<int>> cliques_;
};

SymMatrix sample_cone(const Graph& g, const SampleConfig& cfg, long trial,
                      bool nonneg = false);

struct Counterexample {
  SymMatrix matrix;    // lies in P_G
  PsdVerdict powered;  // failing verdict of the powered image
  std::string witness;
};

struct Verdict {
  bool preserved = true;
  std::optional<Counterexample> counterexample;
  long trials_run = 0;
  std::vector<std::string> witnesses_tried;
};

// Empirical preservation test: witness bank first, then seeded cone
// samples. "preserved" is one-sided; a counterexample is a certificate.
Verdict preserves(const Graph& g, const PowerMap& p, const SampleConfig& cfg,
                  double tol = -1.0);

// preserves() plus step-halving coordinate descent on the sampler
// parameters around the most negative sample seen.
Verdict falsify(const Graph& g, const PowerMap& p, const SampleConfig& cfg,
                long budget = -1, double tol = -1.0);

struct VectorPair {
  std::vector<double> u, v;
};

// Random + local search for a Loewner super-additivity violation
// f[uu^T+vv^T] - f[uu^T] - f[vv^T] not PSD, with u, v of dimension m.
std::optional<VectorPair> superadditive_falsify(int m, const PowerMap& p, long budget,
                                                std::uint64_t seed = 0);

struct ProbePoint {
  double alpha = 0.0;
  bool plain_preserved = true, psi_preserved = true, phi_preserved = true;
};

struct ProbeReport {
  std::vector<ProbePoint> points;
  std::optional<double> empirical_ce;  // smallest grid alpha with everything
                                       // above it preserved for all kinds
  bool closed_form_available = false;
  std::vector<std::string> hard_errors;  // certified member falsified
  bool consistent = true;
};

ProbeReport probe_hset(const Graph& g, std::vector<double> grid,
                       const SampleConfig& cfg);

std::vector<double> default_probe_grid(const Graph& g);

struct CrossCheckItem {
  std::string kind;
  double alpha = 0.0;
  bool expect_preserved = true;
  bool observed_preserved = true;
  bool ok = false;
  std::string witness;
};

struct CrossCheckReport {
  bool consistent = true;
  HSetReport report;
  std::vector<CrossCheckItem> checks;
};

// Verifies the closed-form report against the falsifier: certified members
// survive, and exponents just outside the (upper) set are falsified.
CrossCheckReport cross_check(const Graph& g, const SampleConfig& cfg);

}  // namespace entrypow
