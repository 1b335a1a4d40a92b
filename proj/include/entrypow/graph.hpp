#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entrypow {

// Thrown when an exponential-time search would run past the configured
// vertex cap.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultVertexCap = 64;

// Simple undirected graph on vertices labeled 1..n. No self-loops, no
// parallel edges; adjacency sets are kept symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_vertex(int v) const { return v >= 1 && v <= n_; }
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);

  const std::set<int>& neighbors(int v) const;
  int degree(int v) const;

  // Edges as (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  // Connected components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::set<int>> adj_;  // 1-based; adj_[0] unused
};

enum class FamilyKind {
  complete,
  complete_minus_edge,
  path,
  cycle,
  star,
  complete_bipartite,
  band,
  split,
};

// A named graph family plus its integer parameters, e.g. band:5,2 or
// split:4,1,2,3 (clique size 4, three pendant vertices of degrees 1,2,3).
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  std::vector<int> params;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Canonical labelings: band in natural order; complete_bipartite with part
// A = 1..m and B = m+1..m+n; complete_minus_edge missing {1,n}; star with
// center 1; split with clique 1..c and pendant i attached to 1..d_i.
Graph generate(const FamilySpec& spec);
Graph generate(FamilyKind kind, std::vector<int> params);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> label_map;  // new label v (1-based) -> original label
};

InducedSubgraph induced_subgraph(const Graph& g, const std::set<int>& s);

// G/v: remove v, join its neighbors into a clique; remaining vertices are
// relabeled 1..n-1 in increasing original order.
Graph schur_complement_graph(const Graph& g, int v);

struct Coalescence {
  Graph graph;
  std::vector<int> map1;  // g1 label (1-based) -> result label
  std::vector<int> map2;  // g2 label (1-based) -> result label
};

// Disjoint union of g1 and g2 with v1 and v2 identified.
Coalescence coalesce(const Graph& g1, int v1, const Graph& g2, int v2);

// g plus a fresh path of edge-length m between v1 and v2. For m = 1 adds
// the edge (v1,v2), or returns g unchanged when it is already present.
Graph add_path(const Graph& g, int v1, int v2, int m);

// Largest r such that g contains K_r, or K_r minus one edge, as a
// subgraph. Exact exponential-time search; desk-scale n only.
int largest_near_clique(const Graph& g, int vertex_cap = kDefaultVertexCap);

// True iff every connected component is a single edge. An isolated vertex
// disqualifies.
bool is_disjoint_union_k2(const Graph& g);

// Edge-list text format: header "p <n> <m>", then "e <i> <j>" lines with
// 1-indexed endpoints. Blank lines and "c"-prefixed comments are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);
Graph parse_edge_list(const std::string& text);

namespace detail {
// All maximal cliques via Bron-Kerbosch with pivoting; each clique sorted,
// clique list sorted lexicographically. No cap check here.
std::vector<std::vector<int>> bron_kerbosch(const Graph& g);
}  // namespace detail

}  // namespace entrypow
