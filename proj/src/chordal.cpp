#include "entrypow/chordal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <string>

namespace entrypow {

namespace {

// Shortest path from s to t in g restricted to allowed vertices, or empty.
std::vector<int> bfs_path(const Graph& g, int s, int t,
                          const std::vector<char>& allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::deque<int> queue{s};
  parent[static_cast<std::size_t>(s)] = s;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (int u : g.neighbors(v)) {
      if (!allowed[static_cast<std::size_t>(u)]) continue;
      if (parent[static_cast<std::size_t>(u)] != 0) continue;
      parent[static_cast<std::size_t>(u)] = v;
      queue.push_back(u);
    }
  }
  if (parent[static_cast<std::size_t>(t)] == 0) return {};
  std::vector<int> path{t};
  while (path.back() != s) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

// A chordless cycle of length >= 4 in a non-chordal graph: for a vertex w
// with nonadjacent neighbors x, y, a shortest x-y path avoiding N[w]\{x,y}
// closes into a chordless cycle through w.
std::vector<int> find_chordless_cycle(const Graph& g) {
  int n = g.vertex_count();
  for (int w = 1; w <= n; ++w) {
    std::vector<int> nbr(g.neighbors(w).begin(), g.neighbors(w).end());
    for (std::size_t a = 0; a < nbr.size(); ++a)
      for (std::size_t b = a + 1; b < nbr.size(); ++b) {
        int x = nbr[a], y = nbr[b];
        if (g.has_edge(x, y)) continue;
        std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
        allowed[static_cast<std::size_t>(w)] = 0;
        for (int u : g.neighbors(w))
          if (u != x && u != y) allowed[static_cast<std::size_t>(u)] = 0;
        auto path = bfs_path(g, x, y, allowed);
        if (!path.empty()) {
          path.push_back(w);
          return path;  // x .. y w, cycle order
        }
      }
  }
  return {};
}

}  // namespace

McsResult maximum_cardinality_search(const Graph& g) {
  int n = g.vertex_count();
  McsResult res;
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int step = 1; step <= n; ++step) {
    int pick = 0, best = -1;
    for (int v = 1; v <= n; ++v)
      if (!visited[static_cast<std::size_t>(v)] && weight[static_cast<std::size_t>(v)] > best) {
        best = weight[static_cast<std::size_t>(v)];
        pick = v;
      }
    visited[static_cast<std::size_t>(pick)] = 1;
    position[static_cast<std::size_t>(pick)] = step;
    res.order.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!visited[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }

  // One-pass elimination check on the reversed order: the earlier-visited
  // neighborhood of each vertex, minus its latest member, must sit inside
  // that member's neighborhood.
  res.chordal = true;
  for (int i = 0; i < n && res.chordal; ++i) {
    int v = res.order[static_cast<std::size_t>(i)];
    int u = 0, upos = 0;
    for (int w : g.neighbors(v))
      if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)] &&
          position[static_cast<std::size_t>(w)] > upos) {
        upos = position[static_cast<std::size_t>(w)];
        u = w;
      }
    if (u == 0) continue;
    for (int w : g.neighbors(v)) {
      if (w == u || position[static_cast<std::size_t>(w)] >= position[static_cast<std::size_t>(v)])
        continue;
      if (!g.has_edge(u, w)) {
        res.chordal = false;
        break;
      }
    }
  }
  if (!res.chordal) res.chordless_cycle = find_chordless_cycle(g);
  return res;
}

bool is_chordal(const Graph& g) { return maximum_cardinality_search(g).chordal; }

namespace {

std::vector<std::vector<int>> cliques_from_mcs(const Graph& g, const McsResult& mcs) {
  int n = g.vertex_count();
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    position[static_cast<std::size_t>(mcs.order[static_cast<std::size_t>(i)])] = i + 1;
  std::vector<std::vector<int>> candidates;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> c{v};
    for (int u : g.neighbors(v))
      if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)])
        c.push_back(u);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j || candidates[j].size() <= candidates[i].size()) continue;
      maximal = !std::includes(candidates[j].begin(), candidates[j].end(),
                               candidates[i].begin(), candidates[i].end());
    }
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int vertex_cap) {
  auto mcs = maximum_cardinality_search(g);
  if (mcs.chordal) return cliques_from_mcs(g, mcs);
  if (g.vertex_count() > vertex_cap)
    throw capacity_error("maximal_cliques: " + std::to_string(g.vertex_count()) +
                         " vertices exceed cap " + std::to_string(vertex_cap) +
                         " for non-chordal enumeration");
  return detail::bron_kerbosch(g);
}

int CliqueOrdering::max_clique_size() const {
  std::size_t m = 0;
  for (const auto& c : cliques) m = std::max(m, c.size());
  return static_cast<int>(m);
}

int CliqueOrdering::max_separator_size() const {
  std::size_t m = 0;
  for (const auto& s : separators) m = std::max(m, s.size());
  return static_cast<int>(m);
}

CliqueOrdering perfect_clique_ordering(const Graph& g) {
  auto mcs = maximum_cardinality_search(g);
  if (!mcs.chordal) {
    std::ostringstream msg;
    msg << "graph is not chordal; chordless cycle:";
    for (int v : mcs.chordless_cycle) msg << " " << v;
    throw std::domain_error(msg.str());
  }
  int n = g.vertex_count();
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    position[static_cast<std::size_t>(mcs.order[static_cast<std::size_t>(i)])] = i + 1;

  auto cliques = cliques_from_mcs(g, mcs);
  std::sort(cliques.begin(), cliques.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int pa = 0, pb = 0;
              for (int v : a) pa = std::max(pa, position[static_cast<std::size_t>(v)]);
              for (int v : b) pb = std::max(pb, position[static_cast<std::size_t>(v)]);
              if (pa != pb) return pa < pb;
              return a < b;
            });

  CliqueOrdering ord;
  ord.cliques = std::move(cliques);
  std::set<int> history;
  for (const auto& c : ord.cliques) {
    std::vector<int> sep, res;
    for (int v : c)
      (history.count(v) ? sep : res).push_back(v);
    for (int v : c) history.insert(v);
    ord.histories.emplace_back(history.begin(), history.end());
    ord.residuals.push_back(std::move(res));
    ord.separators.push_back(std::move(sep));
  }

  // running-intersection and separator-completeness sanity check
  for (std::size_t i = 1; i < ord.cliques.size(); ++i) {
    const auto& sep = ord.separators[i];
    bool housed = false;
    for (std::size_t j = 0; j < i && !housed; ++j)
      housed = std::includes(ord.cliques[j].begin(), ord.cliques[j].end(), sep.begin(),
                             sep.end());
    if (!housed) throw std::logic_error("perfect ordering lost the running intersection");
    for (std::size_t a = 0; a < sep.size(); ++a)
      for (std::size_t b = a + 1; b < sep.size(); ++b)
        if (!g.has_edge(sep[a], sep[b]))
          throw std::logic_error("perfect ordering produced an incomplete separator");
  }
  return ord;
}

std::vector<std::vector<int>> clique_matrix(const Graph& g, int vertex_cap) {
  auto cliques = maximal_cliques(g, vertex_cap);
  std::vector<std::vector<int>> m(static_cast<std::size_t>(g.vertex_count()),
                                  std::vector<int>(cliques.size(), 0));
  for (std::size_t j = 0; j < cliques.size(); ++j)
    for (int v : cliques[j]) m[static_cast<std::size_t>(v - 1)][j] = 1;
  return m;
}

Graph minimal_triangulation(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> numbered(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> fill;

  // MCS-M: at each step pick an unnumbered vertex v of maximum weight; any
  // unnumbered u reachable from v through unnumbered interior vertices of
  // weight strictly below w(u) gets its weight bumped, with a fill edge
  // when (u,v) is not already present.
  for (int step = n; step >= 1; --step) {
    int v = 0, best = -1;
    for (int u = 1; u <= n; ++u)
      if (!numbered[static_cast<std::size_t>(u)] && weight[static_cast<std::size_t>(u)] > best) {
        best = weight[static_cast<std::size_t>(u)];
        v = u;
      }
    // minimax interior weight from v over unnumbered paths (Dijkstra-like)
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, inf);
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                        std::greater<>> pq;
    for (int u : g.neighbors(v))
      if (!numbered[static_cast<std::size_t>(u)]) {
        mu[static_cast<std::size_t>(u)] = -1;  // direct edge, no interior
        pq.emplace(-1, u);
      }
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > mu[static_cast<std::size_t>(u)]) continue;
      int through = std::max(d, weight[static_cast<std::size_t>(u)]);
      for (int w : g.neighbors(u)) {
        if (numbered[static_cast<std::size_t>(w)] || w == v) continue;
        if (through < mu[static_cast<std::size_t>(w)]) {
          mu[static_cast<std::size_t>(w)] = through;
          pq.emplace(through, w);
        }
      }
    }
    for (int u = 1; u <= n; ++u) {
      if (numbered[static_cast<std::size_t>(u)] || u == v) continue;
      if (mu[static_cast<std::size_t>(u)] < weight[static_cast<std::size_t>(u)]) {
        ++weight[static_cast<std::size_t>(u)];
        if (!g.has_edge(u, v)) fill.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    numbered[static_cast<std::size_t>(v)] = 1;
  }

  Graph h = g;
  for (auto [i, j] : fill)
    if (!h.has_edge(i, j)) h.add_edge(i, j);
  if (!is_chordal(h)) throw std::logic_error("minimal triangulation failed chordality check");
  return h;
}

DecompositionCheck verify_decomposition(const Graph& g, const std::set<int>& a,
                                        const std::set<int>& c,
                                        const std::set<int>& b) {
  int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  auto assign = [&](const std::set<int>& s, int tag) {
    for (int v : s) {
      if (v < 1 || v > n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      if (owner[static_cast<std::size_t>(v)] != 0)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in more than one part");
      owner[static_cast<std::size_t>(v)] = tag;
    }
  };
  assign(a, 1);
  assign(c, 2);
  assign(b, 3);
  for (int v = 1; v <= n; ++v)
    if (owner[static_cast<std::size_t>(v)] == 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " missing from partition");

  DecompositionCheck out;
  for (auto it = c.begin(); it != c.end(); ++it)
    for (auto jt = std::next(it); jt != c.end(); ++jt)
      if (!g.has_edge(*it, *jt)) {
        out.ok = false;
        out.missing_edge = {*it, *jt};
        return out;
      }

  // flood fill from all of a in g - c; reaching b breaks the separation
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> queue;
  for (int s : a) {
    parent[static_cast<std::size_t>(s)] = s;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (b.count(v)) {
      std::vector<int> path{v};
      while (parent[static_cast<std::size_t>(path.back())] != path.back())
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
      std::reverse(path.begin(), path.end());
      out.ok = false;
      out.violating_path = path;
      return out;
    }
    for (int u : g.neighbors(v)) {
      if (c.count(u) || parent[static_cast<std::size_t>(u)] != 0) continue;
      parent[static_cast<std::size_t>(u)] = v;
      queue.push_back(u);
    }
  }
  out.ok = true;
  return out;
}

}  // namespace entrypow
