#include "entrypow/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrypow/chordal.hpp"

namespace entrypow {

SampleStrategy strategy_from_string(const std::string& name) {
  if (name == "clique_sum") return SampleStrategy::clique_sum;
  if (name == "witness_bank") return SampleStrategy::witness_bank;
  if (name == "mixed") return SampleStrategy::mixed;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::string to_string(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::clique_sum: return "clique_sum";
    case SampleStrategy::witness_bank: return "witness_bank";
    case SampleStrategy::mixed: return "mixed";
  }
  return "?";
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed ^ (0x632BE59BD9B4E019ULL * (stream + 1));
  splitmix(state_);
  splitmix(state_);
}

std::uint64_t Rng::next_u64() { return splitmix(state_); }

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform01();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

int Rng::uniform_int(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

ConeSampler::ConeSampler(const Graph& g, SampleConfig cfg) : g_(&g), cfg_(cfg) {
  if (g.vertex_count() < 1) throw std::invalid_argument("empty graph");
  cliques_ = maximal_cliques(g, cfg.vertex_cap);
}

ConeSampler::Params ConeSampler::draw(long trial) const {
  Rng rng(cfg_.seed, static_cast<std::uint64_t>(trial));
  Params p;
  for (const auto& c : cliques_) {
    int rank = rng.uniform_int(1, static_cast<int>(c.size()));
    p.ranks.push_back(rank);
    for (std::size_t k = 0; k < c.size() * static_cast<std::size_t>(rank); ++k)
      p.entries.push_back(rng.normal() * cfg_.entry_scale);
  }
  return p;
}

SymMatrix ConeSampler::assemble(const Params& p, bool nonneg) const {
  SymMatrix m(g_->vertex_count());
  std::size_t pos = 0;
  for (std::size_t ci = 0; ci < cliques_.size(); ++ci) {
    const auto& c = cliques_[ci];
    int rank = p.ranks[ci];
    std::vector<double> f(c.size() * static_cast<std::size_t>(rank));
    for (auto& x : f) {
      x = p.entries[pos++];
      if (nonneg) x *= x;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i; j < c.size(); ++j) {
        double dot = 0.0;
        for (int k = 0; k < rank; ++k)
          dot += f[i * static_cast<std::size_t>(rank) + static_cast<std::size_t>(k)] *
                 f[j * static_cast<std::size_t>(rank) + static_cast<std::size_t>(k)];
        m.add(c[i] - 1, c[j] - 1, dot);
      }
  }
  return m;
}

SymMatrix ConeSampler::sample(long trial, bool nonneg) const {
  return assemble(draw(trial), nonneg);
}

SymMatrix sample_cone(const Graph& g, const SampleConfig& cfg, long trial, bool nonneg) {
  return ConeSampler(g, cfg).sample(trial, nonneg);
}

namespace {

// stream ids for the independent random consumers
constexpr std::uint64_t kStreamW = 0x57000000ULL;
constexpr std::uint64_t kStreamSuper = 0x5A000000ULL;

SymMatrix embed(int n, const std::vector<int>& vertices, const SymMatrix& small) {
  SymMatrix m(n);
  for (int i = 0; i < small.dim(); ++i)
    for (int j = i; j < small.dim(); ++j)
      m.set(vertices[static_cast<std::size_t>(i)] - 1,
            vertices[static_cast<std::size_t>(j)] - 1, small(i, j));
  return m;
}

std::vector<int> find_path3(const Graph& g) {
  for (int j = 1; j <= g.vertex_count(); ++j) {
    if (g.degree(j) < 2) continue;
    auto it = g.neighbors(j).begin();
    int a = *it;
    int b = *std::next(it);
    return {a, j, b};
  }
  return {};
}

std::vector<int> find_c4(const Graph& g) {
  for (int a = 1; a <= g.vertex_count(); ++a)
    for (int b : g.neighbors(a)) {
      for (int c : g.neighbors(b)) {
        if (c == a) continue;
        for (int d : g.neighbors(c)) {
          if (d == b || d == a) continue;
          if (g.has_edge(d, a)) return {a, b, c, d};
        }
      }
    }
  return {};
}

struct NearClique {
  std::vector<int> order;  // [x, middle..., y]; (x,y) is the zero position
};

// Vertex sets carrying K_r or K_r minus one edge, r = largest_near_clique.
std::vector<NearClique> find_near_cliques(const Graph& g, int cap, std::size_t limit) {
  std::vector<NearClique> out;
  if (g.vertex_count() > cap) return out;
  auto cliques = detail::bron_kerbosch(g);
  std::size_t omega = 0;
  for (const auto& c : cliques) omega = std::max(omega, c.size());
  std::vector<const std::vector<int>*> tops;
  for (const auto& c : cliques)
    if (c.size() == omega) tops.push_back(&c);
  for (std::size_t a = 0; a < tops.size() && out.size() < limit; ++a)
    for (std::size_t b = a + 1; b < tops.size() && out.size() < limit; ++b) {
      std::vector<int> inter, uni;
      std::set_intersection(tops[a]->begin(), tops[a]->end(), tops[b]->begin(),
                            tops[b]->end(), std::back_inserter(inter));
      if (inter.size() + 1 != omega) continue;
      std::set_union(tops[a]->begin(), tops[a]->end(), tops[b]->begin(), tops[b]->end(),
                     std::back_inserter(uni));
      std::vector<int> xa, xb;
      std::set_difference(tops[a]->begin(), tops[a]->end(), inter.begin(), inter.end(),
                          std::back_inserter(xa));
      std::set_difference(tops[b]->begin(), tops[b]->end(), inter.begin(), inter.end(),
                          std::back_inserter(xb));
      NearClique nc;
      nc.order.push_back(xa[0]);
      for (int v : inter) nc.order.push_back(v);
      nc.order.push_back(xb[0]);
      out.push_back(std::move(nc));
    }
  if (out.empty())
    for (const auto* c : tops) {
      if (c->size() < 3 || out.size() >= limit) break;
      NearClique nc;
      nc.order = *c;  // zero placed at the (first,last) pair of a full clique
      out.push_back(std::move(nc));
    }
  return out;
}

// Greedy coordinate descent with step halving on the flattened parameters;
// eval must return the objective (min eigenvalue of the powered image).
template <typename Eval>
double descend(std::vector<double>& params, double current, double step, Eval&& eval,
               int max_iters = 200) {
  for (int iter = 0; iter < max_iters && step > 1e-7; ++iter) {
    bool improved = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
      for (double delta : {step, -step}) {
        double saved = params[i];
        params[i] = saved + delta;
        double e = eval(params);
        if (e < current - 1e-15) {
          current = e;
          improved = true;
          break;
        }
        params[i] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  return current;
}

Counterexample make_counterexample(const Graph& g, const PowerMap& p,
                                   const SymMatrix& m, double tol,
                                   const std::string& witness) {
  if (!in_cone(m, g, tol))
    throw std::logic_error("counterexample candidate left the cone");
  auto verdict = is_psd(entrywise_power(m, p), tol);
  if (verdict.is_psd)
    throw std::logic_error("counterexample candidate does not violate positivity");
  return Counterexample{m, verdict, witness};
}

// u, v draw for super-additivity searches; plain powers need nonnegative
// vectors, the signed extensions alternate signed and nonnegative draws.
VectorPair draw_pair(Rng& rng, int m, const PowerMap& p, long trial) {
  bool nonneg = p.kind == PowerKind::plain || trial % 2 == 1;
  VectorPair out;
  out.u.resize(static_cast<std::size_t>(m));
  out.v.resize(static_cast<std::size_t>(m));
  for (auto* vec : {&out.u, &out.v})
    for (auto& x : *vec) {
      x = rng.normal();
      if (nonneg) x *= x;
    }
  return out;
}

// Rescale so uu^T + vv^T has unit max entry. Power maps commute with
// positive scaling, and keeping the W border blocks at the corner scale
// stops the relative PSD tolerance from swallowing genuine violations.
void normalize_pair(VectorPair& uv) {
  double peak = 0.0;
  for (double x : uv.u) peak = std::max(peak, x * x);
  for (double x : uv.v) peak = std::max(peak, x * x);
  for (std::size_t i = 0; i < uv.u.size(); ++i)
    peak = std::max(peak, std::abs(uv.u[i] * uv.u[i] + uv.v[i] * uv.v[i]));
  if (peak <= 0.0) return;
  double s = 1.0 / std::sqrt(peak);
  for (auto& x : uv.u) x *= s;
  for (auto& x : uv.v) x *= s;
}

bool witness_bank_search(const Graph& g, const PowerMap& p, const SampleConfig& cfg,
                         double tol, Verdict& out) {
  // path3 family: powered determinant goes negative below alpha = 1
  auto path = find_path3(g);
  if (!path.empty()) {
    out.witnesses_tried.push_back("path3");
    for (int k = 1; k <= 9; ++k) {
      double a = 0.1 * k;
      SymMatrix m = embed(g.vertex_count(), path, witness_path3(a));
      if (!is_psd(entrywise_power(m, p), tol).is_psd) {
        std::ostringstream name;
        name << "path3(a=" << a << ")";
        out.counterexample = make_counterexample(g, p, m, tol, name.str());
        return true;
      }
    }
  }

  // cosine matrix on a 4-cycle; only the even extension is sensitive to it
  if (p.kind == PowerKind::even_phi) {
    auto c4 = find_c4(g);
    if (!c4.empty()) {
      out.witnesses_tried.push_back("cosine");
      SymMatrix m = embed(g.vertex_count(), c4, witness_cosine(4));
      if (!is_psd(entrywise_power(m, p), tol).is_psd) {
        out.counterexample = make_counterexample(g, p, m, tol, "cosine(n=4)");
        return true;
      }
    }
  }

  // bordered W matrices at near-cliques: a super-additivity violation in
  // dimension r-2 lifts to a positivity violation on the graph
  std::vector<NearClique> locations;
  try {
    locations = find_near_cliques(g, cfg.vertex_cap, 4);
  } catch (const capacity_error&) {
    locations.clear();
  }
  bool tried_w = false;
  for (const auto& loc : locations) {
    int m_dim = static_cast<int>(loc.order.size()) - 2;
    if (m_dim < 1) continue;
    if (!tried_w) {
      out.witnesses_tried.push_back("W");
      tried_w = true;
    }
    auto try_pair = [&](const VectorPair& uv) -> bool {
      SymMatrix mid = SymMatrix::outer(uv.u) + SymMatrix::outer(uv.v);
      SymMatrix w = witness_W(uv.u, uv.v, mid);
      SymMatrix m = embed(g.vertex_count(), loc.order, w);
      if (is_psd(entrywise_power(m, p), tol).is_psd) return false;
      std::ostringstream name;
      name << "W(r=" << loc.order.size() << ")";
      out.counterexample = make_counterexample(g, p, m, tol, name.str());
      return true;
    };

    std::vector<double> best_params;
    double best_gap = std::numeric_limits<double>::infinity();
    long attempts = std::max<long>(300, cfg.trials / 4);
    for (long t = 0; t < attempts; ++t) {
      Rng rng(cfg.seed, kStreamW + static_cast<std::uint64_t>(t));
      VectorPair uv = draw_pair(rng, m_dim, p, t);
      normalize_pair(uv);
      auto gap = superadditivity_gap(p, uv.u, uv.v);
      if (gap.min_eigenvalue < best_gap) {
        best_gap = gap.min_eigenvalue;
        best_params = uv.u;
        best_params.insert(best_params.end(), uv.v.begin(), uv.v.end());
      }
      if (!gap.is_psd && try_pair(uv)) return true;
    }

    // violations near the threshold are shallow; refine the best pair with
    // a scale-invariant descent on the gap
    if (!best_params.empty()) {
      bool nonneg_only = p.kind == PowerKind::plain;
      auto unpack = [&](const std::vector<double>& flat) {
        VectorPair uv;
        uv.u.assign(flat.begin(), flat.begin() + m_dim);
        uv.v.assign(flat.begin() + m_dim, flat.end());
        if (nonneg_only)
          for (auto* vec : {&uv.u, &uv.v})
            for (auto& x : *vec) x = std::abs(x);
        normalize_pair(uv);
        return uv;
      };
      auto eval = [&](const std::vector<double>& flat) {
        VectorPair uv = unpack(flat);
        return superadditivity_gap(p, uv.u, uv.v).min_eigenvalue;
      };
      descend(best_params, best_gap, 0.25, eval);
      VectorPair uv = unpack(best_params);
      if (!superadditivity_gap(p, uv.u, uv.v).is_psd && try_pair(uv)) return true;
    }
  }
  return false;
}

}  // namespace

Verdict preserves(const Graph& g, const PowerMap& p, const SampleConfig& cfg, double tol) {
  Verdict v;
  if (cfg.strategy != SampleStrategy::clique_sum &&
      witness_bank_search(g, p, cfg, tol, v)) {
    v.preserved = false;
    return v;
  }
  if (cfg.strategy != SampleStrategy::witness_bank) {
    ConeSampler sampler(g, cfg);
    bool nonneg = p.kind == PowerKind::plain;
    for (long t = 0; t < cfg.trials; ++t) {
      SymMatrix m = sampler.sample(t, nonneg);
      auto verdict = is_psd(entrywise_power(m, p), tol);
      ++v.trials_run;
      if (!verdict.is_psd) {
        std::ostringstream name;
        name << "clique_sum(trial=" << t << ")";
        v.counterexample = make_counterexample(g, p, m, tol, name.str());
        break;
      }
    }
  }
  v.preserved = !v.counterexample.has_value();
  return v;
}

Verdict falsify(const Graph& g, const PowerMap& p, const SampleConfig& cfg, long budget,
                double tol) {
  if (budget < 0) budget = cfg.trials;
  Verdict v;
  if (cfg.strategy != SampleStrategy::clique_sum &&
      witness_bank_search(g, p, cfg, tol, v)) {
    v.preserved = false;
    return v;
  }

  ConeSampler sampler(g, cfg);
  bool nonneg = p.kind == PowerKind::plain;
  ConeSampler::Params best;
  double best_eig = std::numeric_limits<double>::infinity();
  for (long t = 0; t < budget; ++t) {
    auto params = sampler.draw(t);
    SymMatrix m = sampler.assemble(params, nonneg);
    auto verdict = is_psd(entrywise_power(m, p), tol);
    ++v.trials_run;
    if (!verdict.is_psd) {
      std::ostringstream name;
      name << "clique_sum(trial=" << t << ")";
      v.counterexample = make_counterexample(g, p, m, tol, name.str());
      v.preserved = false;
      return v;
    }
    if (verdict.min_eigenvalue < best_eig) {
      best_eig = verdict.min_eigenvalue;
      best = std::move(params);
    }
  }

  if (!best.entries.empty()) {
    auto eval = [&](const std::vector<double>& entries) {
      ConeSampler::Params trial{best.ranks, entries};
      return is_psd(entrywise_power(sampler.assemble(trial, nonneg), p), tol)
          .min_eigenvalue;
    };
    std::vector<double> entries = best.entries;
    descend(entries, best_eig, 0.25 * cfg.entry_scale, eval);
    ConeSampler::Params refined{best.ranks, entries};
    SymMatrix m = sampler.assemble(refined, nonneg);
    auto verdict = is_psd(entrywise_power(m, p), tol);
    if (!verdict.is_psd) {
      v.counterexample = make_counterexample(g, p, m, tol, "local_search");
      v.preserved = false;
      return v;
    }
  }
  v.preserved = true;
  return v;
}

std::optional<VectorPair> superadditive_falsify(int m, const PowerMap& p, long budget,
                                                std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("dimension must be positive");
  VectorPair best;
  double best_eig = std::numeric_limits<double>::infinity();
  for (long t = 0; t < budget; ++t) {
    Rng rng(seed, kStreamSuper + static_cast<std::uint64_t>(t));
    VectorPair uv = draw_pair(rng, m, p, t);
    normalize_pair(uv);
    auto gap = superadditivity_gap(p, uv.u, uv.v);
    if (!gap.is_psd) return uv;
    if (gap.min_eigenvalue < best_eig) {
      best_eig = gap.min_eigenvalue;
      best = uv;
    }
  }
  if (best.u.empty()) return std::nullopt;

  // nonnegative draws were squared; keep the search inside the same region
  bool nonneg_only = p.kind == PowerKind::plain;
  auto eval = [&](const std::vector<double>& flat) {
    VectorPair uv;
    uv.u.assign(flat.begin(), flat.begin() + m);
    uv.v.assign(flat.begin() + m, flat.end());
    if (nonneg_only)
      for (auto* vec : {&uv.u, &uv.v})
        for (auto& x : *vec) x = std::abs(x);
    return superadditivity_gap(p, uv.u, uv.v).min_eigenvalue;
  };
  std::vector<double> flat = best.u;
  flat.insert(flat.end(), best.v.begin(), best.v.end());
  double refined = descend(flat, best_eig, 0.25, eval);
  if (refined < -1e-9) {
    VectorPair uv;
    uv.u.assign(flat.begin(), flat.begin() + m);
    uv.v.assign(flat.begin() + m, flat.end());
    if (nonneg_only)
      for (auto* vec : {&uv.u, &uv.v})
        for (auto& x : *vec) x = std::abs(x);
    if (!superadditivity_gap(p, uv.u, uv.v).is_psd) return uv;
  }
  return std::nullopt;
}

ProbeReport probe_hset(const Graph& g, std::vector<double> grid, const SampleConfig& cfg) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::optional<HSetReport> closed;
  try {
    closed = hset(g, HsetOptions{cfg.vertex_cap});
  } catch (const capacity_error&) {
    closed.reset();
  }

  ProbeReport rep;
  rep.closed_form_available = closed.has_value();
  for (double alpha : grid) {
    ProbePoint pt;
    pt.alpha = alpha;
    for (PowerKind kind :
         {PowerKind::plain, PowerKind::odd_psi, PowerKind::even_phi}) {
      PowerMap p{kind, alpha};
      Verdict v = falsify(g, p, cfg, cfg.trials);
      bool preserved = v.preserved;
      const HSet* hs = nullptr;
      if (closed)
        hs = kind == PowerKind::plain ? &closed->plain
             : kind == PowerKind::odd_psi ? &closed->psi
                                          : &closed->phi;
      if (hs && hs->contains(alpha) && !preserved) {
        std::ostringstream msg;
        msg << p.name() << " is certified preserved but was falsified by "
            << v.counterexample->witness;
        rep.hard_errors.push_back(msg.str());
      }
      if (kind == PowerKind::plain) pt.plain_preserved = preserved;
      if (kind == PowerKind::odd_psi) pt.psi_preserved = preserved;
      if (kind == PowerKind::even_phi) pt.phi_preserved = preserved;
    }
    rep.points.push_back(pt);
  }
  for (auto it = rep.points.rbegin(); it != rep.points.rend(); ++it) {
    if (it->plain_preserved && it->psi_preserved && it->phi_preserved)
      rep.empirical_ce = it->alpha;
    else
      break;
  }
  rep.consistent = rep.hard_errors.empty();
  return rep;
}

std::vector<double> default_probe_grid(const Graph& g) {
  std::vector<double> grid;
  double hi = std::max(1.0, static_cast<double>(g.vertex_count() - 2));
  for (double a = 0.25; a <= hi + 1e-9; a += 0.25) grid.push_back(a);
  try {
    HSetReport rep = hset(g);
    for (const HSet* h : {&rep.plain, &rep.psi, &rep.phi}) {
      if (!h->exact) continue;
      double t = h->set.ray_start;
      if (t - 0.01 > 0) grid.push_back(t - 0.01);
      grid.push_back(t + 0.01);
    }
  } catch (const std::exception&) {
    // no closed form; plain 0.25 grid
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

const char* kind_name(PowerKind k) {
  return k == PowerKind::plain ? "plain" : k == PowerKind::odd_psi ? "psi" : "phi";
}

std::vector<double> members_to_check(const HSetForm& f) {
  std::vector<double> out{f.ray_start, f.ray_start + 0.75};
  auto ladder = f.discrete_below_ray();
  for (std::size_t i = 0; i < ladder.size() && i < 2; ++i) out.push_back(ladder[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  while (!out.empty() && out.front() < 0.0) out.erase(out.begin());
  return out;
}

}  // namespace

CrossCheckReport cross_check(const Graph& g, const SampleConfig& cfg) {
  CrossCheckReport rep;
  rep.report = hset(g, HsetOptions{cfg.vertex_cap});

  struct KindSet {
    PowerKind kind;
    const HSet* h;
  };
  const KindSet kinds[] = {{PowerKind::plain, &rep.report.plain},
                           {PowerKind::odd_psi, &rep.report.psi},
                           {PowerKind::even_phi, &rep.report.phi}};
  for (const auto& [kind, h] : kinds) {
    for (double alpha : members_to_check(h->lower)) {
      PowerMap p{kind, alpha};
      Verdict v = falsify(g, p, cfg, cfg.trials);
      CrossCheckItem item;
      item.kind = kind_name(kind);
      item.alpha = alpha;
      item.expect_preserved = true;
      item.observed_preserved = v.preserved;
      item.ok = v.preserved;
      if (!v.preserved) item.witness = v.counterexample->witness;
      rep.checks.push_back(item);
    }
    double just_below = h->upper.ray_start - 0.25;
    if (just_below > 0.0 && !h->upper.contains(just_below)) {
      PowerMap p{kind, just_below};
      Verdict v = falsify(g, p, cfg, cfg.trials);
      CrossCheckItem item;
      item.kind = kind_name(kind);
      item.alpha = just_below;
      item.expect_preserved = false;
      item.observed_preserved = v.preserved;
      item.ok = !v.preserved;
      if (!v.preserved) item.witness = v.counterexample->witness;
      rep.checks.push_back(item);
    }
  }
  rep.consistent = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CrossCheckItem& c) { return c.ok; });
  return rep;
}

}  // namespace entrypow
