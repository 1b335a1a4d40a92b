// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs single-threaded and is fully seeded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "entrypow/chordal.hpp"
#include "entrypow/graph.hpp"
#include "entrypow/hset.hpp"
#include "entrypow/sym_matrix.hpp"
#include "entrypow/verifier.hpp"
#include "test_util.hpp"

using namespace entrypow;

namespace {

int criteria_failed = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int num, const std::string& name, bool ok, double secs,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", num,
              name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++criteria_failed;
}

double det3(const SymMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

SampleConfig cfg_with(std::uint64_t seed, long trials) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

// ---- criterion 1 ------------------------------------------------------

bool three_way(const Graph& g, int expected, std::string& detail) {
  auto rep = critical_exponent_chordal(g);  // Gram vs separator asserted inside
  int formula = static_cast<int>(rep.ce_plain);
  int separator = std::max(rep.omega - 2, *rep.s);
  int near = largest_near_clique(g) - 2;
  if (formula == expected && separator == expected && near == expected) return true;
  std::ostringstream ss;
  ss << "expected " << expected << ", got formula=" << formula
     << " separator=" << separator << " near_clique=" << near;
  detail = ss.str();
  return false;
}

void criterion1() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 10 && ok; ++n)
    ok = three_way(test_util::random_tree(n, static_cast<std::uint64_t>(n)), 1, detail);
  for (int n = 2; n <= 8 && ok; ++n)
    ok = three_way(generate(FamilyKind::complete, {n}), n - 2, detail);
  for (int d = 1; d <= 4 && ok; ++d)
    for (int n = d + 2; n <= 10 && ok; ++n)
      ok = three_way(generate(FamilyKind::band, {n, d}), d, detail);
  for (int n = 3; n <= 8 && ok; ++n)
    ok = three_way(test_util::fan(n), std::min(2, n - 2), detail);
  for (int c = 3; c <= 6 && ok; ++c)
    for (int dmax = 1; dmax <= c - 1 && ok; ++dmax) {
      std::vector<int> params{c};
      for (int d = 1; d <= dmax; ++d) params.push_back(d);
      ok = three_way(generate(FamilyKind::split, params), std::max(c - 2, dmax), detail);
    }
  double secs = t.seconds();
  if (ok && secs >= 5.0) {
    ok = false;
    detail = "runtime budget of 5 s exceeded";
  }
  report(1, "family exponent table, three-way agreement", ok, secs, detail);
}

// ---- criterion 2 ------------------------------------------------------

void criterion2() {
  Timer t;
  bool ok = true;
  std::string detail;
  long checked = 0;
  for (int n = 2; n <= 6 && ok; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits) && ok; ++mask) {
      Graph g = test_util::graph_from_mask(n, mask);
      if (!g.is_connected() || !is_chordal(g)) continue;
      auto rep = critical_exponent_chordal(g);
      int oracle = largest_near_clique(g) - 2;
      ++checked;
      if (static_cast<int>(rep.ce_plain) != oracle) {
        ok = false;
        std::ostringstream ss;
        ss << "n=" << n << " mask=" << mask << ": formula " << rep.ce_plain
           << " vs oracle " << oracle;
        detail = ss.str();
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 200 && ok; ++seed) {
    Graph g = test_util::random_chordal(8, seed);
    auto rep = critical_exponent_chordal(g);
    int oracle = largest_near_clique(g) - 2;
    ++checked;
    if (static_cast<int>(rep.ce_plain) != oracle) {
      ok = false;
      detail = "random chordal seed " + std::to_string(seed) + " disagrees";
    }
  }
  double secs = t.seconds();
  if (ok && secs >= 60.0) {
    ok = false;
    detail = "runtime budget of 60 s exceeded";
  }
  report(2, "exhaustive and randomized oracle equivalence (" +
                std::to_string(checked) + " graphs)",
         ok, secs, detail);
}

// ---- criterion 3 ------------------------------------------------------

void criterion3() {
  Timer t;
  bool ok = true;
  std::string detail;

  // P_3 at alpha = 0.5: powered path witness determinant is exactly -0.4
  SymMatrix a06 = witness_path3(0.6);
  for (PowerKind kind : {PowerKind::plain, PowerKind::odd_psi, PowerKind::even_phi}) {
    double det = det3(entrywise_power(a06, PowerMap{kind, 0.5}));
    if (std::abs(det - (-0.4)) > 1e-12) {
      ok = false;
      detail = "powered path3 determinant " + std::to_string(det);
    }
  }
  Graph p3 = generate(FamilyKind::path, {3});
  for (PowerKind kind : {PowerKind::plain, PowerKind::odd_psi, PowerKind::even_phi}) {
    auto v = falsify(p3, PowerMap{kind, 0.5}, cfg_with(0, 100));
    if (v.preserved || v.counterexample->witness.substr(0, 5) != "path3") {
      ok = false;
      detail = "P_3 alpha 0.5 not falsified by the path witness";
    }
  }

  // K_4 plain 1.5 within 10^4 trials
  auto k4 = falsify(generate(FamilyKind::complete, {4}), {PowerKind::plain, 1.5},
                    cfg_with(0, 10000));
  if (k4.preserved) {
    ok = false;
    detail = "K_4 plain 1.5 not falsified";
  }

  // C_4 phi 1.75 via the cosine witness, min eigenvalue below -1e-6
  auto c4 = falsify(generate(FamilyKind::cycle, {4}), {PowerKind::even_phi, 1.75},
                    cfg_with(0, 10000));
  if (c4.preserved || c4.counterexample->witness != "cosine(n=4)" ||
      c4.counterexample->powered.min_eigenvalue >= -1e-6) {
    ok = false;
    detail = "C_4 phi 1.75 cosine falsification failed";
  }

  // K_4 minus an edge, plain 1.75, via the bordered W construction
  auto k4m = falsify(generate(FamilyKind::complete_minus_edge, {4}),
                     {PowerKind::plain, 1.75}, cfg_with(0, 10000));
  if (k4m.preserved || k4m.counterexample->witness.substr(0, 1) != "W") {
    ok = false;
    detail = "K_4 minus edge plain 1.75 W falsification failed";
  }

  report(3, "witness falsifications", ok, t.seconds(), detail);
}

// ---- criterion 4 ------------------------------------------------------

void criterion4() {
  Timer t;
  bool ok = true;
  std::string detail;
  struct Spot {
    Graph g;
    PowerKind kind;
    double alpha;
    const char* name;
  };
  std::vector<Spot> spots;
  spots.push_back({generate(FamilyKind::complete, {4}), PowerKind::plain, 2.0, "K_4 plain 2"});
  spots.push_back({generate(FamilyKind::cycle, {5}), PowerKind::odd_psi, 1.0, "C_5 psi 1"});
  spots.push_back({generate(FamilyKind::complete_bipartite, {3, 3}), PowerKind::plain, 1.2,
                   "K_{3,3} plain 1.2"});
  for (PowerKind kind : {PowerKind::plain, PowerKind::odd_psi, PowerKind::even_phi})
    spots.push_back({generate(FamilyKind::band, {7, 2}), kind, 2.0, "band(7,2) alpha 2"});
  for (const auto& spot : spots) {
    SampleConfig cfg = cfg_with(2024, 1000);
    cfg.strategy = SampleStrategy::mixed;
    auto v = preserves(spot.g, PowerMap{spot.kind, spot.alpha}, cfg, 1e-9);
    if (!v.preserved) {
      ok = false;
      detail = std::string(spot.name) + " produced a violation";
    }
  }
  report(4, "preservation spot checks, 10^3 seeded trials each", ok, t.seconds(), detail);
}

// ---- criterion 5 ------------------------------------------------------

void criterion5() {
  Timer t;
  bool ok = true;
  std::string detail;
  struct Case {
    int m;
    PowerKind kind;
    double alpha;
    bool expect_violation;
    long budget;
    const char* name;
  };
  const Case cases[] = {
      {2, PowerKind::plain, 1.5, true, 10000, "(m=2, plain 1.5)"},
      {3, PowerKind::plain, 2.5, true, 10000, "(m=3, plain 2.5)"},
      {2, PowerKind::odd_psi, 2.0, true, 10000, "(m=2, psi 2)"},
      {2, PowerKind::even_phi, 1.0, true, 10000, "(m=2, phi 1)"},
      {2, PowerKind::plain, 2.0, false, 1000, "(m=2, plain 2)"},
      {3, PowerKind::plain, 3.0, false, 1000, "(m=3, plain 3)"},
  };
  for (const auto& c : cases) {
    auto found = superadditive_falsify(c.m, PowerMap{c.kind, c.alpha}, c.budget, 0);
    if (found.has_value() != c.expect_violation) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += std::string(c.name) + (c.expect_violation ? ": no violation found"
                                                          : ": unexpected violation");
    }
  }
  report(5, "Loewner super-additivity suite", ok, t.seconds(), detail);
}

// ---- criterion 6 ------------------------------------------------------

void criterion6() {
  Timer t;
  bool ok = true;
  std::string detail;

  // 10^4 clique-sum samples across 20 random graphs stay in the cone
  for (std::uint64_t gseed = 0; gseed < 20 && ok; ++gseed) {
    Graph g = test_util::random_graph(8, 0.45, gseed * 7 + 1);
    if (g.edge_count() == 0) continue;
    ConeSampler sampler(g, cfg_with(gseed, 1));
    for (long trial = 0; trial < 500 && ok; ++trial) {
      if (!in_cone(sampler.sample(trial, trial % 2 == 0), g, -1.0)) {
        ok = false;
        detail = "cone sample escaped the cone";
      }
    }
  }

  // 10^3 split reconstructions on chordal samples, 1e-10 relative
  for (std::uint64_t seed = 0; seed < 1000 && ok; ++seed) {
    Graph g = test_util::random_chordal(7, seed);
    auto ordering = perfect_clique_ordering(g);
    if (ordering.cliques.size() < 2) continue;
    std::set<int> bpart(ordering.residuals.back().begin(),
                        ordering.residuals.back().end());
    std::set<int> cpart(ordering.separators.back().begin(),
                        ordering.separators.back().end());
    std::set<int> apart;
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (!bpart.count(v) && !cpart.count(v)) apart.insert(v);
    if (apart.empty()) continue;
    SymMatrix m = sample_cone(g, cfg_with(seed, 1), 0);
    for (int i = 0; i < m.dim(); ++i) m.add(i, i, 0.5);
    auto split = split_decomposition(m, apart, cpart, bpart);
    SymMatrix sum = split.m1 + split.m2;
    double scale = std::max(1.0, m.max_abs());
    for (int i = 0; i < m.dim() && ok; ++i)
      for (int j = i; j < m.dim() && ok; ++j) {
        double target = m(i, j) + (i == j ? split.eps_used : 0.0);
        if (std::abs(sum(i, j) - target) > 1e-10 * scale) {
          ok = false;
          detail = "split reconstruction error at seed " + std::to_string(seed);
        }
      }
    if (ok && (!is_psd(split.m1).is_psd || !is_psd(split.m2).is_psd)) {
      ok = false;
      detail = "split part lost positivity at seed " + std::to_string(seed);
    }
  }

  // 10^3 Schur complements land in the Schur complement graph's cone
  for (std::uint64_t seed = 0; seed < 1000 && ok; ++seed) {
    Graph g = test_util::random_graph(7, 0.5, seed + 3000);
    if (g.edge_count() == 0) continue;
    SymMatrix m = sample_cone(g, cfg_with(seed, 1), 1);
    for (int i = 0; i < m.dim(); ++i) m.add(i, i, 1.0);
    int v = 1 + static_cast<int>(seed % 7);
    if (!in_cone(matrix_schur_complement(m, v - 1), schur_complement_graph(g, v), -1.0)) {
      ok = false;
      detail = "Schur complement pattern violated at seed " + std::to_string(seed);
    }
  }

  // 10^3 paired trials: powering verdicts are invariant under D C D scaling
  for (std::uint64_t seed = 0; seed < 1000 && ok; ++seed) {
    Graph g = test_util::random_graph(6, 0.5, seed + 5000);
    if (g.edge_count() == 0) continue;
    bool nonneg = seed % 3 == 0;
    PowerKind kind = nonneg ? PowerKind::plain
                            : (seed % 3 == 1 ? PowerKind::odd_psi : PowerKind::even_phi);
    double alpha = 0.5 + static_cast<double>(seed % 8) * 0.35;
    SymMatrix m = sample_cone(g, cfg_with(seed, 1), 2, nonneg);
    for (int i = 0; i < m.dim(); ++i) m.add(i, i, 1.0);
    auto corr = to_correlation(m);
    PowerMap p{kind, alpha};
    bool direct = is_psd(entrywise_power(m, p)).is_psd;
    bool scaled = is_psd(entrywise_power(corr.c, p)).is_psd;
    if (direct != scaled) {
      ok = false;
      detail = "correlation-form verdict flipped at seed " + std::to_string(seed);
    }
  }

  report(6, "structural property battery", ok, t.seconds(), detail);
}

// ---- criterion 7 ------------------------------------------------------

void criterion7() {
  Timer t;
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::string, Graph>> battery;

  for (int n = 3; n <= 10; ++n)
    battery.emplace_back("tree:" + std::to_string(n),
                         test_util::random_tree(n, static_cast<std::uint64_t>(n) + 40));
  for (int n = 2; n <= 8; ++n)
    battery.emplace_back("complete:" + std::to_string(n),
                         generate(FamilyKind::complete, {n}));
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 2; n <= 10; n += 2)
      battery.emplace_back("band:" + std::to_string(n) + "," + std::to_string(d),
                           generate(FamilyKind::band, {n, d}));
  for (int n = 3; n <= 8; ++n)
    battery.emplace_back("fan:" + std::to_string(n), test_util::fan(n));
  for (int c = 3; c <= 6; ++c) {
    std::vector<int> params{c};
    for (int d = 1; d <= c - 1; ++d) params.push_back(d);
    battery.emplace_back("split:" + std::to_string(c), generate(FamilyKind::split, params));
  }
  for (int n = 3; n <= 8; ++n)
    battery.emplace_back("cycle:" + std::to_string(n), generate(FamilyKind::cycle, {n}));
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n)
      battery.emplace_back("bipartite:" + std::to_string(m) + "," + std::to_string(n),
                           generate(FamilyKind::complete_bipartite, {m, n}));
  {
    auto two = coalesce(generate(FamilyKind::cycle, {4}), 1,
                        generate(FamilyKind::complete, {3}), 1);
    battery.emplace_back("coalesce(C4,K3)", two.graph);
    auto cacti = coalesce(generate(FamilyKind::cycle, {4}), 2,
                          generate(FamilyKind::cycle, {4}), 1);
    battery.emplace_back("coalesce(C4,C4)", cacti.graph);
    auto three = coalesce(cacti.graph, 5, generate(FamilyKind::complete, {4}), 1);
    battery.emplace_back("coalesce(C4,C4,K4)", three.graph);
    auto mixed = coalesce(generate(FamilyKind::complete, {4}), 2,
                          generate(FamilyKind::cycle, {5}), 1);
    auto mixed3 = coalesce(mixed.graph, 7, generate(FamilyKind::path, {2}), 1);
    battery.emplace_back("coalesce(K4,C5,K2)", mixed3.graph);
  }

  long graphs_checked = 0;
  for (const auto& [name, g] : battery) {
    auto rep = cross_check(g, cfg_with(11, 400));
    ++graphs_checked;
    if (!rep.consistent) {
      ok = false;
      for (const auto& c : rep.checks)
        if (!c.ok) {
          detail = name + " " + c.kind + " alpha=" + std::to_string(c.alpha) +
                   " expected " + (c.expect_preserved ? "preserved" : "falsified");
          break;
        }
      break;
    }
  }
  double secs = t.seconds();
  if (ok && secs >= 600.0) {
    ok = false;
    detail = "runtime budget of 600 s exceeded";
  }
  report(7, "cross-check harness over " + std::to_string(graphs_checked) + " graphs",
         ok, secs, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (criteria_failed) {
    std::printf("%d criterion(s) failed\n", criteria_failed);
    return 1;
  }
  std::puts("all criteria passed");
  return 0;
}
