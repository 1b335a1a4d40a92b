#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "entrypow/graph.hpp"

namespace entrypow {

struct McsResult {
  std::vector<int> order;  // visit order w_1..w_n
  bool chordal = false;
  // When not chordal, a chordless cycle of length >= 4 (vertices in cycle
  // order); empty otherwise.
  std::vector<int> chordless_cycle;
};

// Maximum cardinality search with lowest-label tie-breaking. The visit
// order, read in reverse, is a perfect elimination ordering iff the graph
// is chordal; the flag reports the one-pass check.
McsResult maximum_cardinality_search(const Graph& g);

bool is_chordal(const Graph& g);

// All maximal cliques, each sorted, the sequence sorted lexicographically.
// Chordal graphs take the elimination-ordering route; others fall back to
// Bron-Kerbosch under the vertex cap.
std::vector<std::vector<int>> maximal_cliques(const Graph& g,
                                              int vertex_cap = kDefaultVertexCap);

// Ordered maximal cliques C_1..C_k with histories H_j = C_1 ∪ .. ∪ C_j,
// residuals R_j = C_j \ H_{j-1} and separators S_j = H_{j-1} ∩ C_j.
struct CliqueOrdering {
  std::vector<std::vector<int>> cliques;
  std::vector<std::vector<int>> histories;
  std::vector<std::vector<int>> residuals;
  std::vector<std::vector<int>> separators;

  int max_clique_size() const;
  int max_separator_size() const;
};

// Perfect ordering of the maximal cliques of a chordal graph: cliques
// sorted by the maximum MCS position of their vertices, ties broken
// lexicographically. Throws std::domain_error naming a chordless cycle
// when the input is not chordal.
CliqueOrdering perfect_clique_ordering(const Graph& g);

// 0/1 vertex-by-clique incidence matrix, |V| rows, one column per maximal
// clique in canonical clique order.
std::vector<std::vector<int>> clique_matrix(const Graph& g,
                                            int vertex_cap = kDefaultVertexCap);

// Chordal supergraph on the same vertices via an MCS-M style minimal-fill
// sweep. Chordal inputs come back unchanged.
Graph minimal_triangulation(const Graph& g);

struct DecompositionCheck {
  bool ok = false;
  // On failure: an a-to-b path avoiding c, or a missing edge inside c.
  std::vector<int> violating_path;
  std::optional<std::pair<int, int>> missing_edge;
};

// Checks that (a,c,b) partitions the vertices, c separates a from b, and
// the subgraph induced by c is complete.
DecompositionCheck verify_decomposition(const Graph& g, const std::set<int>& a,
                                        const std::set<int>& c,
                                        const std::set<int>& b);

}  // namespace entrypow
