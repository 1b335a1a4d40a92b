#include "entrypow/sym_matrix.hpp"

#include <Eigen/Dense>

#include "entrypow/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace entrypow {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
  data_.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2, 0.0);
}

std::size_t SymMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("matrix index out of range");
  if (i > j) std::swap(i, j);
  auto si = static_cast<std::size_t>(i);
  auto sj = static_cast<std::size_t>(j);
  auto sn = static_cast<std::size_t>(n_);
  return si * sn - si * (si + 1) / 2 + sj;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

SymMatrix SymMatrix::outer(std::span<const double> u) {
  SymMatrix m(static_cast<int>(u.size()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      m.set(i, j, u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)]);
  return m;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool SymMatrix::all_finite() const {
  for (double x : data_)
    if (!std::isfinite(x)) return false;
  return true;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

double PowerMap::apply(double x) const {
  if (x == 0.0) return 0.0;
  switch (kind) {
    case PowerKind::plain:
      if (x < 0.0)
        throw std::domain_error("plain power applied to a negative entry");
      return std::pow(x, alpha);
    case PowerKind::odd_psi:
      return (x < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(x), alpha);
    case PowerKind::even_phi:
      return std::pow(std::abs(x), alpha);
  }
  return 0.0;
}

std::string PowerMap::name() const {
  const char* k = kind == PowerKind::plain ? "plain"
                  : kind == PowerKind::odd_psi ? "psi"
                                               : "phi";
  std::ostringstream ss;
  ss << k << "(alpha=" << alpha << ")";
  return ss.str();
}

PowerKind power_kind_from_string(const std::string& name) {
  if (name == "plain") return PowerKind::plain;
  if (name == "psi" || name == "odd_psi") return PowerKind::odd_psi;
  if (name == "phi" || name == "even_phi") return PowerKind::even_phi;
  throw std::invalid_argument("unknown power kind '" + name + "'");
}

namespace {

Eigen::MatrixXd to_eigen(const SymMatrix& m) {
  Eigen::MatrixXd a(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a(i, j) = m(i, j);
  return a;
}

}  // namespace

PsdVerdict is_psd(const SymMatrix& m, double tol) {
  if (m.dim() == 0) throw std::invalid_argument("empty matrix");
  if (!m.all_finite()) throw std::invalid_argument("matrix has non-finite entries");
  if (tol < 0.0) tol = 1e-9 * std::max(1.0, m.max_abs());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  PsdVerdict v;
  v.min_eigenvalue = solver.eigenvalues()(0);
  v.tolerance_used = tol;
  v.is_psd = v.min_eigenvalue >= -tol;
  if (!v.is_psd) {
    Eigen::VectorXd vec = solver.eigenvectors().col(0);
    v.certificate.assign(vec.data(), vec.data() + vec.size());
  }
  return v;
}

SymMatrix entrywise_power(const SymMatrix& m, const PowerMap& p) {
  if (p.kind == PowerKind::plain)
    for (int i = 0; i < m.dim(); ++i)
      for (int j = i; j < m.dim(); ++j)
        if (m(i, j) < 0.0)
          throw std::domain_error("plain power requires nonnegative entries; entry (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") = " + std::to_string(m(i, j)));
  SymMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) out.set(i, j, p.apply(m(i, j)));
  return out;
}

bool in_cone(const SymMatrix& m, const Graph& g, double tol) {
  if (m.dim() != g.vertex_count())
    throw std::invalid_argument("matrix dimension does not match graph order");
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (!g.has_edge(i + 1, j + 1) && m(i, j) != 0.0) return false;
  return is_psd(m, tol).is_psd;
}

Graph pattern_graph(const SymMatrix& m) {
  Graph g(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (m(i, j) != 0.0) g.add_edge(i + 1, j + 1);
  return g;
}

SymMatrix matrix_schur_complement(const SymMatrix& m, int v) {
  if (v < 0 || v >= m.dim()) throw std::invalid_argument("pivot index out of range");
  double pivot = m(v, v);
  if (pivot == 0.0) throw std::domain_error("zero pivot in Schur complement");
  SymMatrix out(m.dim() - 1);
  auto row = [&](int i) { return i < v ? i : i + 1; };
  for (int i = 0; i < out.dim(); ++i)
    for (int j = i; j < out.dim(); ++j)
      out.set(i, j, m(row(i), row(j)) - m(row(i), v) * m(row(j), v) / pivot);
  return out;
}

namespace {

Eigen::MatrixXd block(const SymMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(rows[i], cols[j]);
  return out;
}

void place(SymMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols,
           const Eigen::MatrixXd& v) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[i] <= cols[j])
        m.set(rows[i], cols[j],
              v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
}

bool near_singular(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(a);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return s.eigenvalues().cwiseAbs().minCoeff() <= 1e-12 * scale;
}

}  // namespace

SplitDecomposition split_decomposition(const SymMatrix& m, const std::set<int>& a,
                                       const std::set<int>& c, const std::set<int>& b,
                                       double eps) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (a.empty() || b.empty())
    throw std::invalid_argument("split needs nonempty a and b parts");
  Graph pattern = pattern_graph(m);
  auto check = verify_decomposition(pattern, a, c, b);
  if (!check.ok)
    throw std::domain_error("(a,c,b) is not a decomposition of the matrix pattern");
  if (!is_psd(m).is_psd)
    throw std::domain_error("split_decomposition requires a PSD input");

  std::vector<int> ia, ic, ib;  // 0-based row indices
  for (int v : a) ia.push_back(v - 1);
  for (int v : c) ic.push_back(v - 1);
  for (int v : b) ib.push_back(v - 1);

  SplitDecomposition out;
  out.eps_used = 0.0;
  SymMatrix work = m;
  if (near_singular(block(work, ia, ia)) || near_singular(block(work, ib, ib))) {
    out.eps_used = eps;
    for (int i = 0; i < work.dim(); ++i) work.add(i, i, eps);
  }

  out.m1 = SymMatrix(m.dim());
  out.m2 = SymMatrix(m.dim());
  Eigen::MatrixXd maa = block(work, ia, ia);
  Eigen::MatrixXd mbb = block(work, ib, ib);
  place(out.m1, ia, ia, maa);
  place(out.m2, ib, ib, mbb);
  if (!ic.empty()) {
    Eigen::MatrixXd mac = block(work, ia, ic);
    Eigen::MatrixXd mcb = block(work, ic, ib);
    Eigen::MatrixXd mcc = block(work, ic, ic);
    Eigen::MatrixXd corner = mac.transpose() * maa.ldlt().solve(mac);
    place(out.m1, ia, ic, mac);
    place(out.m1, ic, ia, mac.transpose());
    place(out.m1, ic, ic, corner);
    place(out.m2, ic, ic, mcc - corner);
    place(out.m2, ic, ib, mcb);
    place(out.m2, ib, ic, mcb.transpose());
  }
  return out;
}

SymMatrix witness_W(std::span<const double> u, std::span<const double> v,
                    const SymMatrix& mid) {
  int m = static_cast<int>(u.size());
  if (static_cast<int>(v.size()) != m || mid.dim() != m)
    throw std::invalid_argument("witness_W dimension mismatch");
  SymMatrix w(m + 2);
  w.set(0, 0, 1.0);
  w.set(m + 1, m + 1, 1.0);
  for (int i = 0; i < m; ++i) {
    w.set(0, i + 1, u[static_cast<std::size_t>(i)]);
    w.set(i + 1, m + 1, v[static_cast<std::size_t>(i)]);
    for (int j = i; j < m; ++j) w.set(i + 1, j + 1, mid(i, j));
  }
  return w;
}

SymMatrix witness_path3(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::invalid_argument("witness_path3 needs a in [0,1]");
  double s = std::sqrt(1.0 - a * a);
  SymMatrix m(3);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  m.set(2, 2, 1.0);
  m.set(0, 1, a);
  m.set(1, 2, s);
  return m;
}

SymMatrix witness_cosine(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("witness_cosine needs an even dimension >= 4");
  SymMatrix m(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, (j - i == n / 2) ? 0.0 : std::cos((j - i) * pi / n));
  return m;
}

PsdVerdict superadditivity_gap(const PowerMap& p, std::span<const double> u,
                               std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
  SymMatrix uu = SymMatrix::outer(u);
  SymMatrix vv = SymMatrix::outer(v);
  SymMatrix sum = uu + vv;
  SymMatrix gap = entrywise_power(sum, p) - entrywise_power(uu, p) - entrywise_power(vv, p);
  return is_psd(gap);
}

SymMatrix diagonal_conjugate(const SymMatrix& m, std::span<const double> d) {
  if (static_cast<int>(d.size()) != m.dim())
    throw std::invalid_argument("scale vector dimension mismatch");
  for (double x : d)
    if (!(x > 0.0)) throw std::invalid_argument("scale vector must be positive");
  SymMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      out.set(i, j, d[static_cast<std::size_t>(i)] * m(i, j) * d[static_cast<std::size_t>(j)]);
  return out;
}

CorrelationForm to_correlation(const SymMatrix& m) {
  CorrelationForm out;
  out.scale.resize(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    if (!(m(i, i) > 0.0))
      throw std::domain_error("to_correlation needs a strictly positive diagonal");
    out.scale[static_cast<std::size_t>(i)] = std::sqrt(m(i, i));
  }
  out.c = SymMatrix(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    out.c.set(i, i, 1.0);
    for (int j = i + 1; j < m.dim(); ++j)
      out.c.set(i, j, m(i, j) / (out.scale[static_cast<std::size_t>(i)] *
                                 out.scale[static_cast<std::size_t>(j)]));
  }
  return out;
}

SymMatrix read_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw std::invalid_argument("matrix parse error: bad dimension");
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
        throw std::invalid_argument("matrix parse error: expected " + std::to_string(n * n) +
                                    " entries");
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      double y = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("matrix parse error: non-finite entry");
      if (std::abs(x - y) > 1e-12)
        throw std::invalid_argument("matrix parse error: asymmetry above 1e-12 at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      m.set(i, j, (x + y) / 2.0);
    }
  return m;
}

SymMatrix parse_matrix(const std::string& text) {
  std::stringstream ss(text);
  return read_matrix(ss);
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
  out << m.dim() << "\n";
  char buf[32];
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

std::string matrix_string(const SymMatrix& m) {
  std::ostringstream ss;
  write_matrix(ss, m);
  return ss.str();
}

}  // namespace entrypow
