#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "entrypow/graph.hpp"
#include "entrypow/verifier.hpp"

namespace test_util {

// Erdos-Renyi-ish graph from the deterministic project stream.
inline entrypow::Graph random_graph(int n, double p, std::uint64_t seed) {
  entrypow::Rng rng(seed, 0xE7);
  entrypow::Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.uniform01() < p) g.add_edge(i, j);
  return g;
}

// Random tree: vertex i hangs off a uniformly chosen earlier vertex.
inline entrypow::Graph random_tree(int n, std::uint64_t seed) {
  entrypow::Rng rng(seed, 0x73);
  entrypow::Graph g(n);
  for (int i = 2; i <= n; ++i) g.add_edge(i, rng.uniform_int(1, i - 1));
  return g;
}

// Random connected chordal graph: each new vertex attaches to a nonempty
// random subset of a random maximal clique of the part built so far.
inline entrypow::Graph random_chordal(int n, std::uint64_t seed) {
  entrypow::Rng rng(seed, 0xC4);
  entrypow::Graph g(n);
  std::vector<std::set<int>> grown;  // cliques seen so far (not all maximal)
  grown.push_back({1});
  for (int i = 2; i <= n; ++i) {
    const auto& base = grown[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(grown.size()) - 1))];
    std::vector<int> pool(base.begin(), base.end());
    int take = rng.uniform_int(1, static_cast<int>(pool.size()));
    // deterministic partial shuffle
    for (int k = 0; k < take; ++k) {
      int j = rng.uniform_int(k, static_cast<int>(pool.size()) - 1);
      std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
    }
    std::set<int> clique(pool.begin(), pool.begin() + take);
    for (int v : clique) g.add_edge(i, v);
    clique.insert(i);
    grown.push_back(std::move(clique));
  }
  return g;
}

// Fan: hub 1 joined to every vertex of the path 2..n.
inline entrypow::Graph fan(int n) {
  entrypow::Graph g(n);
  for (int i = 2; i <= n; ++i) g.add_edge(1, i);
  for (int i = 2; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Brute-force isomorphism for small graphs (n <= 8).
inline bool isomorphic(const entrypow::Graph& a, const entrypow::Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (auto [i, j] : a.edges()) {
      if (!b.has_edge(perm[static_cast<std::size_t>(i - 1)],
                      perm[static_cast<std::size_t>(j - 1)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All graphs on n labeled vertices, one per edge-subset mask.
inline entrypow::Graph graph_from_mask(int n, std::uint64_t mask) {
  entrypow::Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (mask & (1ULL << bit)) g.add_edge(i, j);
  return g;
}

}  // namespace test_util
