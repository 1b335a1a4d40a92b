#include "entrypow/hset.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

namespace entrypow {

std::string to_string(DiscreteSet d) {
  switch (d) {
    case DiscreteSet::empty: return "empty";
    case DiscreteSet::naturals: return "naturals";
    case DiscreteSet::odd_naturals: return "odd_naturals";
    case DiscreteSet::even_naturals: return "even_naturals";
  }
  return "?";
}

DiscreteSet discrete_from_string(const std::string& name) {
  if (name == "empty") return DiscreteSet::empty;
  if (name == "naturals") return DiscreteSet::naturals;
  if (name == "odd_naturals") return DiscreteSet::odd_naturals;
  if (name == "even_naturals") return DiscreteSet::even_naturals;
  throw std::invalid_argument("unknown discrete set '" + name + "'");
}

namespace {

double discrete_min(DiscreteSet d) {
  switch (d) {
    case DiscreteSet::empty: return std::numeric_limits<double>::infinity();
    case DiscreteSet::naturals:
    case DiscreteSet::odd_naturals: return 1.0;
    case DiscreteSet::even_naturals: return 2.0;
  }
  return std::numeric_limits<double>::infinity();
}

bool discrete_contains(DiscreteSet d, double alpha) {
  if (alpha < 1.0 || alpha != std::floor(alpha)) return false;
  auto k = static_cast<long long>(alpha);
  switch (d) {
    case DiscreteSet::empty: return false;
    case DiscreteSet::naturals: return true;
    case DiscreteSet::odd_naturals: return k % 2 == 1;
    case DiscreteSet::even_naturals: return k % 2 == 0;
  }
  return false;
}

DiscreteSet discrete_meet(DiscreteSet a, DiscreteSet b) {
  if (a == b) return a;
  if (a == DiscreteSet::empty || b == DiscreteSet::empty) return DiscreteSet::empty;
  if (a == DiscreteSet::naturals) return b;
  if (b == DiscreteSet::naturals) return a;
  return DiscreteSet::empty;  // odd ∧ even
}

DiscreteSet discrete_join(DiscreteSet a, DiscreteSet b) {
  if (a == b) return a;
  if (a == DiscreteSet::empty) return b;
  if (b == DiscreteSet::empty) return a;
  return DiscreteSet::naturals;
}

}  // namespace

bool HSetForm::contains(double alpha) const {
  return alpha >= ray_start || discrete_contains(discrete, alpha);
}

HSetForm HSetForm::canonical() const {
  HSetForm out = *this;
  if (ray_start <= discrete_min(discrete)) out.discrete = DiscreteSet::empty;
  return out;
}

std::vector<double> HSetForm::discrete_below_ray() const {
  std::vector<double> out;
  if (discrete == DiscreteSet::empty) return out;
  double step = discrete == DiscreteSet::naturals ? 1.0 : 2.0;
  for (double d = discrete_min(discrete); d < ray_start && out.size() < 4096; d += step)
    out.push_back(d);
  return out;
}

bool HSetForm::subset_of(const HSetForm& other) const {
  if (ray_start < other.ray_start) return false;
  for (double d : discrete_below_ray())
    if (!other.contains(d)) return false;
  return true;
}

HSetForm intersect(const HSetForm& a, const HSetForm& b) {
  HSetForm out;
  out.ray_start = std::max(a.ray_start, b.ray_start);
  out.discrete = discrete_meet(a.discrete, b.discrete);
  if (a.ray_start <= discrete_min(b.discrete))
    out.discrete = discrete_join(out.discrete, b.discrete);
  if (b.ray_start <= discrete_min(a.discrete))
    out.discrete = discrete_join(out.discrete, a.discrete);
  out = out.canonical();
  // the representation is exact only when every discrete point agrees
  for (const HSetForm* side : {&a, &b}) {
    HSetForm probe{side->discrete, out.ray_start};
    for (double d : probe.discrete_below_ray()) {
      bool truth = a.contains(d) && b.contains(d);
      if (truth != out.contains(d))
        throw std::logic_error("H-set intersection left the representable family");
    }
  }
  return out;
}

HSetForm union_with_naturals(const HSetForm& a) {
  return HSetForm{DiscreteSet::naturals, a.ray_start}.canonical();
}

HSet HSet::make_exact(HSetForm f) {
  HSet h;
  h.set = f.canonical();
  h.exact = true;
  h.lower = h.set;
  h.upper = h.set;
  return h;
}

HSet HSet::make_bounded(HSetForm lo, HSetForm hi, std::vector<double> excl) {
  lo = lo.canonical();
  hi = hi.canonical();
  if (lo == hi && excl.empty()) return make_exact(lo);
  if (!lo.subset_of(hi))
    throw std::logic_error("bounded H-set with lower not contained in upper");
  HSet h;
  h.exact = false;
  h.set = lo;
  h.lower = lo;
  h.upper = hi;
  std::sort(excl.begin(), excl.end());
  excl.erase(std::unique(excl.begin(), excl.end()), excl.end());
  h.exclusions = std::move(excl);
  return h;
}

std::string to_string(HSetMethod m) {
  switch (m) {
    case HSetMethod::complete_formula: return "complete_formula";
    case HSetMethod::chordal_formula: return "chordal_formula";
    case HSetMethod::tree: return "tree";
    case HSetMethod::cycle: return "cycle";
    case HSetMethod::bipartite: return "bipartite";
    case HSetMethod::coalescence: return "coalescence";
    case HSetMethod::k2_union: return "k2_union";
    case HSetMethod::triangulation_bounds: return "triangulation_bounds";
  }
  return "?";
}

namespace {

HSetForm ray(double t) { return HSetForm{DiscreteSet::empty, t}; }

void fill_exact_power_sets(HSetReport& rep, double ce) {
  rep.plain = HSet::make_exact(HSetForm{DiscreteSet::naturals, ce});
  rep.psi = HSet::make_exact(HSetForm{DiscreteSet::odd_naturals, ce});
  rep.phi = HSet::make_exact(HSetForm{DiscreteSet::even_naturals, ce});
  rep.ce_plain = rep.ce_psi = rep.ce_phi = ce;
}

}  // namespace

HSetReport critical_exponent_chordal(const Graph& g, int vertex_cap) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("critical exponent needs n >= 2");
  if (g.edge_count() == 0)
    throw std::invalid_argument("critical exponent needs at least one edge");
  auto ordering = perfect_clique_ordering(g);  // throws for non-chordal input
  int omega = ordering.max_clique_size();
  int s = ordering.max_separator_size();
  int ce = std::max(omega - 2, s);

  // Gram route: largest entry of M(G)^T M(G) - 2 I over clique columns.
  // Skipped when the clique count makes the pairwise pass too big; the
  // separator route is equivalent.
  std::size_t k = ordering.cliques.size();
  if (k * k <= 4'000'000) {
    int gram = 0;
    for (std::size_t i = 0; i < k; ++i) {
      gram = std::max(gram, static_cast<int>(ordering.cliques[i].size()) - 2);
      for (std::size_t j = i + 1; j < k; ++j) {
        std::vector<int> inter;
        std::set_intersection(ordering.cliques[i].begin(), ordering.cliques[i].end(),
                              ordering.cliques[j].begin(), ordering.cliques[j].end(),
                              std::back_inserter(inter));
        gram = std::max(gram, static_cast<int>(inter.size()));
      }
    }
    if (gram != ce)
      throw std::logic_error("clique Gram route and separator route disagree: " +
                             std::to_string(gram) + " vs " + std::to_string(ce));
  }
  (void)vertex_cap;

  HSetReport rep;
  rep.method = k == 1 ? HSetMethod::complete_formula : HSetMethod::chordal_formula;
  rep.omega = omega;
  rep.r = ce + 2;
  rep.s = s;
  fill_exact_power_sets(rep, ce);
  return rep;
}

namespace {

bool is_forest(const Graph& g) {
  return g.edge_count() ==
         g.vertex_count() - static_cast<int>(g.components().size());
}

// Peels degree <= 1 vertices; the remaining 2-core carries all H-set
// information, pendant trees change nothing.
std::set<int> two_core(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::deque<int> peel;
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) peel.push_back(v);
  }
  while (!peel.empty()) {
    int v = peel.front();
    peel.pop_front();
    if (gone[static_cast<std::size_t>(v)]) continue;
    gone[static_cast<std::size_t>(v)] = 1;
    for (int u : g.neighbors(v)) {
      if (gone[static_cast<std::size_t>(u)]) continue;
      if (--deg[static_cast<std::size_t>(u)] <= 1) peel.push_back(u);
    }
  }
  std::set<int> core;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) core.insert(v);
  return core;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !g.is_connected()) return false;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::optional<std::pair<std::set<int>, std::set<int>>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::pair<std::set<int>, std::set<int>> parts;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] != 0) continue;
    color[static_cast<std::size_t>(s)] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      (color[static_cast<std::size_t>(v)] == 1 ? parts.first : parts.second).insert(v);
      for (int u : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] == 0) {
          color[static_cast<std::size_t>(u)] = -color[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return parts;
}

// Biconnected components as vertex sets (bridges come out as K_2 blocks).
std::vector<std::vector<int>> biconnected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::set<int>::const_iterator it;
  };

  for (int s = 1; s <= n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != 0) continue;
    std::vector<Frame> frames;
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = ++timer;
    frames.push_back({s, 0, g.neighbors(s).begin()});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.it != g.neighbors(f.v).end()) {
        int u = *f.it;
        ++f.it;
        if (u == f.parent) continue;
        if (disc[static_cast<std::size_t>(u)] == 0) {
          estack.emplace_back(f.v, u);
          disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
          int v = f.v;
          frames.push_back({u, v, g.neighbors(u).begin()});
        } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(f.v)]) {
          estack.emplace_back(f.v, u);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (frames.empty()) continue;
        Frame& pf = frames.back();
        low[static_cast<std::size_t>(pf.v)] =
            std::min(low[static_cast<std::size_t>(pf.v)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(pf.v)]) {
          std::set<int> verts;
          while (!estack.empty()) {
            auto e = estack.back();
            estack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == std::make_pair(pf.v, v)) break;
          }
          blocks.emplace_back(verts.begin(), verts.end());
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

HSetReport k2_union_report() {
  HSetReport rep;
  rep.method = HSetMethod::k2_union;
  rep.omega = 2;
  rep.r = 2;
  rep.s = 0;
  rep.plain = HSet::make_exact(ray(0.0));
  rep.psi = HSet::make_exact(ray(0.0));
  rep.phi = HSet::make_exact(ray(0.0));
  rep.ce_plain = rep.ce_psi = rep.ce_phi = 0.0;
  return rep;
}

HSetReport cycle_report(int len) {
  HSetReport rep;
  rep.method = HSetMethod::cycle;
  rep.omega = 2;
  rep.r = 3;
  rep.plain = HSet::make_exact(ray(1.0));
  rep.psi = HSet::make_exact(ray(1.0));
  if (len == 4) {
    rep.phi = HSet::make_exact(ray(2.0));
  } else {
    std::vector<double> excl;
    if (len % 2 == 0) excl.push_back(1.0);
    rep.phi = HSet::make_bounded(ray(2.0), ray(1.0), std::move(excl));
  }
  rep.ce_plain = rep.ce_psi = 1.0;
  rep.ce_phi = 2.0;
  return rep;
}

HSetReport bipartite_report(const Graph& core) {
  auto parts = bipartition(core);
  if (!parts) throw std::logic_error("bipartite branch on a non-bipartite graph");
  bool k2m = std::min(parts->first.size(), parts->second.size()) == 2;
  HSetReport rep;
  rep.method = HSetMethod::bipartite;
  rep.omega = 2;
  rep.r = 3;
  rep.plain = HSet::make_exact(ray(1.0));
  rep.phi = k2m ? HSet::make_exact(ray(2.0)) : HSet::make_bounded(ray(2.0), ray(1.0));
  rep.psi = HSet::make_bounded(HSetForm{DiscreteSet::odd_naturals, k2m ? 2.0 : 3.0},
                               ray(1.0));
  rep.ce_plain = 1.0;
  rep.ce_psi = rep.psi.lower.ray_start;
  rep.ce_phi = 2.0;
  return rep;
}

HSetReport triangulation_bounds_report(const Graph& core, int vertex_cap) {
  Graph filled = minimal_triangulation(core);
  HSetReport chordal_rep = critical_exponent_chordal(filled, vertex_cap);
  double ce_upper = chordal_rep.ce_plain;
  int r = largest_near_clique(core, vertex_cap);
  auto cliques = maximal_cliques(core, vertex_cap);
  std::size_t omega = 0;
  for (const auto& c : cliques) omega = std::max(omega, c.size());

  HSetReport rep;
  rep.method = HSetMethod::triangulation_bounds;
  rep.omega = static_cast<int>(omega);
  rep.r = r;
  double floor_ce = static_cast<double>(r - 2);
  rep.plain = HSet::make_bounded(HSetForm{DiscreteSet::naturals, ce_upper},
                                 HSetForm{DiscreteSet::naturals, floor_ce});
  rep.psi = HSet::make_bounded(HSetForm{DiscreteSet::odd_naturals, ce_upper},
                               HSetForm{DiscreteSet::odd_naturals, floor_ce});
  rep.phi = HSet::make_bounded(HSetForm{DiscreteSet::even_naturals, ce_upper},
                               HSetForm{DiscreteSet::even_naturals, floor_ce});
  rep.ce_plain = rep.ce_psi = rep.ce_phi = ce_upper;
  return rep;
}

HSet intersect_hsets(const HSet& a, const HSet& b) {
  std::vector<double> excl = a.exclusions;
  excl.insert(excl.end(), b.exclusions.begin(), b.exclusions.end());
  if (a.exact && b.exact && excl.empty())
    return HSet::make_exact(intersect(a.set, b.set));
  return HSet::make_bounded(intersect(a.lower, b.lower), intersect(a.upper, b.upper),
                            std::move(excl));
}

double report_ce(const HSet& h) { return h.lower.ray_start; }

HSetReport combine_disjoint(const std::vector<HSetReport>& parts) {
  HSetReport rep = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    rep.plain = intersect_hsets(rep.plain, parts[i].plain);
    rep.psi = intersect_hsets(rep.psi, parts[i].psi);
    rep.phi = intersect_hsets(rep.phi, parts[i].phi);
    rep.omega = std::max(rep.omega, parts[i].omega);
    rep.r = std::max(rep.r, parts[i].r);
  }
  rep.s.reset();
  // label with the component that binds the plain exponent
  const HSetReport* binding = &parts.front();
  for (const auto& p : parts)
    if (report_ce(p.plain) > report_ce(binding->plain)) binding = &p;
  rep.method = binding->method;
  rep.ce_plain = report_ce(rep.plain);
  rep.ce_psi = report_ce(rep.psi);
  rep.ce_phi = report_ce(rep.phi);
  return rep;
}

HSetReport combine_coalescence(const std::vector<HSetReport>& blocks) {
  HSetForm cap1 = ray(1.0);
  auto combine = [&](auto&& pick, bool plain_kind) {
    HSetForm lo = cap1, hi = cap1;
    bool all_exact = true;
    std::vector<double> excl;
    for (const auto& b : blocks) {
      const HSet& h = pick(b);
      lo = intersect(lo, h.lower);
      hi = intersect(hi, h.upper);
      all_exact = all_exact && h.exact;
      excl.insert(excl.end(), h.exclusions.begin(), h.exclusions.end());
    }
    if (plain_kind) {
      lo = union_with_naturals(lo);
      // the subgraph envelope is not capped at 1
      hi = ray(0.0);
      for (const auto& b : blocks) hi = intersect(hi, pick(b).upper);
    }
    if (all_exact && lo == hi && excl.empty()) return HSet::make_exact(lo);
    return HSet::make_bounded(lo, hi, std::move(excl));
  };

  HSetReport rep;
  rep.method = HSetMethod::coalescence;
  rep.plain = combine([](const HSetReport& r) -> const HSet& { return r.plain; }, true);
  rep.psi = combine([](const HSetReport& r) -> const HSet& { return r.psi; }, false);
  rep.phi = combine([](const HSetReport& r) -> const HSet& { return r.phi; }, false);
  rep.omega = 2;
  rep.r = 3;
  for (const auto& b : blocks) {
    rep.omega = std::max(rep.omega, b.omega);
    rep.r = std::max(rep.r, b.r);
  }
  rep.ce_plain = report_ce(rep.plain);
  rep.ce_psi = report_ce(rep.psi);
  rep.ce_phi = report_ce(rep.phi);
  return rep;
}

HSetReport block_report(const Graph& b, const HsetOptions& opt) {
  if (is_chordal(b)) return critical_exponent_chordal(b, opt.vertex_cap);
  if (is_cycle_graph(b)) return cycle_report(b.vertex_count());
  if (bipartition(b)) return bipartite_report(b);
  return triangulation_bounds_report(b, opt.vertex_cap);
}

HSetReport hset_stripped(const Graph& g0, const HsetOptions& opt) {
  if (is_disjoint_union_k2(g0)) return k2_union_report();
  if (is_chordal(g0)) {
    HSetReport rep = critical_exponent_chordal(g0, opt.vertex_cap);
    if (is_forest(g0)) rep.method = HSetMethod::tree;
    return rep;
  }
  auto comps = g0.components();
  if (comps.size() > 1) {
    std::vector<HSetReport> parts;
    for (const auto& comp : comps) {
      std::set<int> cs(comp.begin(), comp.end());
      parts.push_back(hset_stripped(induced_subgraph(g0, cs).graph, opt));
    }
    return combine_disjoint(parts);
  }

  // connected and non-chordal: pendant trees do not move the H-sets
  std::set<int> core_vertices = two_core(g0);
  Graph core = static_cast<int>(core_vertices.size()) == g0.vertex_count()
                   ? g0
                   : induced_subgraph(g0, core_vertices).graph;
  if (is_cycle_graph(core)) return cycle_report(core.vertex_count());
  auto blocks = biconnected_components(core);
  if (blocks.size() > 1) {
    std::vector<HSetReport> parts;
    for (const auto& blk : blocks) {
      std::set<int> bs(blk.begin(), blk.end());
      parts.push_back(block_report(induced_subgraph(core, bs).graph, opt));
    }
    return combine_coalescence(parts);
  }
  if (bipartition(core)) return bipartite_report(core);
  return triangulation_bounds_report(core, opt.vertex_cap);
}

}  // namespace

HSetReport hset(const Graph& g, const HsetOptions& opt) {
  if (g.vertex_count() < 2) throw std::invalid_argument("hset needs n >= 2");
  if (g.edge_count() == 0)
    throw std::invalid_argument(
        "hset needs at least one edge; the all-diagonal cone is preserved by "
        "every real power");
  std::set<int> keep;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) > 0) keep.insert(v);
  if (static_cast<int>(keep.size()) == g.vertex_count()) return hset_stripped(g, opt);
  return hset_stripped(induced_subgraph(g, keep).graph, opt);
}

}  // namespace entrypow
