#pragma once

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "entrypow/graph.hpp"

namespace entrypow {

// Dense real symmetric matrix, upper-triangular row-major storage.
// Indices are 0-based; the pattern graph of a matrix uses vertex v for
// row/column v-1.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n);

  static SymMatrix identity(int n);
  static SymMatrix diagonal(std::span<const double> d);
  // uu^T for a single vector, or sum of outer products of the columns.
  static SymMatrix outer(std::span<const double> u);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value) { data_[index(i, j)] = value; }
  void add(int i, int j, double value) { data_[index(i, j)] += value; }

  double max_abs() const;
  bool all_finite() const;

  SymMatrix& operator+=(const SymMatrix& other);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  SymMatrix& operator-=(const SymMatrix& other);
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<double> data_;
};

enum class PowerKind { plain, odd_psi, even_phi };

// One of the three entrywise power families: x^alpha on nonnegatives, the
// odd extension psi_alpha(x) = sgn(x)|x|^alpha, or the even extension
// phi_alpha(x) = |x|^alpha. Every kind maps 0 to 0, for every alpha.
struct PowerMap {
  PowerKind kind = PowerKind::plain;
  double alpha = 1.0;

  double apply(double x) const;
  std::string name() const;
};

PowerKind power_kind_from_string(const std::string& name);

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  double tolerance_used = 0.0;
  std::vector<double> certificate;  // offending unit vector when not PSD
};

// PSD test by symmetric eigendecomposition. tol < 0 selects the default
// 1e-9 * max(1, largest |entry|).
PsdVerdict is_psd(const SymMatrix& m, double tol = -1.0);

SymMatrix entrywise_power(const SymMatrix& m, const PowerMap& p);

// Membership in P_G: PSD and exactly zero at every off-diagonal non-edge.
bool in_cone(const SymMatrix& m, const Graph& g, double tol = -1.0);

// Graph on m.dim() vertices with an edge wherever an off-diagonal entry is
// nonzero.
Graph pattern_graph(const SymMatrix& m);

// Schur complement of the (v,v) entry, 0-based v; requires a nonzero pivot.
SymMatrix matrix_schur_complement(const SymMatrix& m, int v);

struct SplitDecomposition {
  SymMatrix m1;     // supported on a ∪ c
  SymMatrix m2;     // supported on b ∪ c
  double eps_used;  // 0 unless the input needed regularizing; then
                    // m1 + m2 = m + eps_used * I
};

// Splits m ∈ P_G across a verified decomposition (a,c,b) of its pattern
// graph (1-based vertex labels). Singular corner blocks trigger the
// eps * I regularization.
SplitDecomposition split_decomposition(const SymMatrix& m, const std::set<int>& a,
                                       const std::set<int>& c, const std::set<int>& b,
                                       double eps = 1e-8);

// Bordered matrix [[1, u^T, 0], [u, mid, v], [0, v^T, 1]].
SymMatrix witness_W(std::span<const double> u, std::span<const double> v,
                    const SymMatrix& mid);

// [[1, a, 0], [a, 1, sqrt(1-a^2)], [0, sqrt(1-a^2), 1]] for a in [0,1].
SymMatrix witness_path3(double a);

// (cos((j-k)pi/n))_{j,k=1..n} for even n >= 4; entries with |j-k| = n/2
// are exactly zero.
SymMatrix witness_cosine(int n);

// Verdict on f[uu^T + vv^T] - f[uu^T] - f[vv^T].
PsdVerdict superadditivity_gap(const PowerMap& p, std::span<const double> u,
                               std::span<const double> v);

// D * m * D for a positive diagonal vector d.
SymMatrix diagonal_conjugate(const SymMatrix& m, std::span<const double> d);

struct CorrelationForm {
  SymMatrix c;                // unit diagonal
  std::vector<double> scale;  // d with m = D c D
};

CorrelationForm to_correlation(const SymMatrix& m);

// Text format: first line n, then n rows of n space-separated decimals.
// The reader validates symmetry to 1e-12 and symmetrizes by averaging.
SymMatrix read_matrix(std::istream& in);
SymMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const SymMatrix& m);
std::string matrix_string(const SymMatrix& m);

}  // namespace entrypow
