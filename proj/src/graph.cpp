#include "entrypow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace entrypow {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.assign(static_cast<std::size_t>(n) + 1, {});
}

void Graph::check_vertex(int v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n_));
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return adj_[static_cast<std::size_t>(i)].count(j) > 0;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  if (adj_[static_cast<std::size_t>(i)].count(j))
    throw std::invalid_argument("duplicate edge {" + std::to_string(i) + "," +
                                std::to_string(j) + "}");
  adj_[static_cast<std::size_t>(i)].insert(j);
  adj_[static_cast<std::size_t>(j)].insert(i);
  ++m_;
}

const std::set<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 1; i <= n_; ++i)
    for (int j : adj_[static_cast<std::size_t>(i)])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (int s = 1; s <= n_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp, stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : adj_[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

namespace {

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_minus_edge: return "complete_minus_edge";
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::complete_bipartite: return "bipartite";
    case FamilyKind::band: return "band";
    case FamilyKind::split: return "split";
  }
  return "?";
}

void require(bool ok, const std::string& constraint) {
  if (!ok) throw std::invalid_argument("invalid family parameters: " + constraint);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "complete")
    spec.kind = FamilyKind::complete;
  else if (name == "complete_minus_edge")
    spec.kind = FamilyKind::complete_minus_edge;
  else if (name == "path")
    spec.kind = FamilyKind::path;
  else if (name == "cycle")
    spec.kind = FamilyKind::cycle;
  else if (name == "star")
    spec.kind = FamilyKind::star;
  else if (name == "bipartite" || name == "complete_bipartite")
    spec.kind = FamilyKind::complete_bipartite;
  else if (name == "band")
    spec.kind = FamilyKind::band;
  else if (name == "split")
    spec.kind = FamilyKind::split;
  else
    throw std::invalid_argument("unknown graph family '" + name + "'");

  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter '" + tok + "'");
      }
      if (used != tok.size())
        throw std::invalid_argument("bad family parameter '" + tok + "'");
      spec.params.push_back(value);
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family_name(kind);
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

Graph generate(FamilyKind kind, std::vector<int> params) {
  return generate(FamilySpec{kind, std::move(params)});
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::complete: {
      require(p.size() == 1 && p[0] >= 1, "complete needs n >= 1");
      Graph g(p[0]);
      for (int i = 1; i <= p[0]; ++i)
        for (int j = i + 1; j <= p[0]; ++j) g.add_edge(i, j);
      return g;
    }
    case FamilyKind::complete_minus_edge: {
      require(p.size() == 1 && p[0] >= 2, "complete_minus_edge needs n >= 2");
      Graph g(p[0]);
      for (int i = 1; i <= p[0]; ++i)
        for (int j = i + 1; j <= p[0]; ++j)
          if (!(i == 1 && j == p[0])) g.add_edge(i, j);
      return g;
    }
    case FamilyKind::path: {
      require(p.size() == 1 && p[0] >= 1, "path needs n >= 1");
      Graph g(p[0]);
      for (int i = 1; i < p[0]; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case FamilyKind::cycle: {
      require(p.size() == 1 && p[0] >= 3, "cycle needs n >= 3");
      Graph g(p[0]);
      for (int i = 1; i < p[0]; ++i) g.add_edge(i, i + 1);
      g.add_edge(p[0], 1);
      return g;
    }
    case FamilyKind::star: {
      require(p.size() == 1 && p[0] >= 2, "star needs n >= 2");
      Graph g(p[0]);
      for (int i = 2; i <= p[0]; ++i) g.add_edge(1, i);
      return g;
    }
    case FamilyKind::complete_bipartite: {
      require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "bipartite needs m,n >= 1");
      Graph g(p[0] + p[1]);
      for (int i = 1; i <= p[0]; ++i)
        for (int j = p[0] + 1; j <= p[0] + p[1]; ++j) g.add_edge(i, j);
      return g;
    }
    case FamilyKind::band: {
      require(p.size() == 2 && p[1] >= 1 && p[1] < p[0], "band needs 1 <= d < n");
      Graph g(p[0]);
      for (int i = 1; i <= p[0]; ++i)
        for (int j = i + 1; j <= p[0] && j - i <= p[1]; ++j) g.add_edge(i, j);
      return g;
    }
    case FamilyKind::split: {
      require(p.size() >= 1 && p[0] >= 2, "split needs clique size c >= 2");
      int c = p[0];
      int k = static_cast<int>(p.size()) - 1;
      for (int i = 1; i <= k; ++i)
        require(p[static_cast<std::size_t>(i)] >= 1 && p[static_cast<std::size_t>(i)] <= c - 1,
                "split pendant degrees need 1 <= d_i <= c-1");
      Graph g(c + k);
      for (int i = 1; i <= c; ++i)
        for (int j = i + 1; j <= c; ++j) g.add_edge(i, j);
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= p[static_cast<std::size_t>(i)]; ++j) g.add_edge(c + i, j);
      return g;
    }
  }
  throw std::invalid_argument("unknown family kind");
}

InducedSubgraph induced_subgraph(const Graph& g, const std::set<int>& s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  std::vector<int> label_map(s.begin(), s.end());  // sorted: new -> old
  std::vector<int> inv(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < label_map.size(); ++k) {
    int v = label_map[k];
    if (!g.has_vertex(v))
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    inv[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
  }
  Graph h(static_cast<int>(label_map.size()));
  for (std::size_t k = 0; k < label_map.size(); ++k)
    for (int u : g.neighbors(label_map[k]))
      if (inv[static_cast<std::size_t>(u)] > static_cast<int>(k) + 1)
        h.add_edge(static_cast<int>(k) + 1, inv[static_cast<std::size_t>(u)]);
  return {std::move(h), std::move(label_map)};
}

Graph schur_complement_graph(const Graph& g, int v) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("schur complement graph needs n >= 2");
  if (!g.has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  std::set<int> rest;
  for (int i = 1; i <= g.vertex_count(); ++i)
    if (i != v) rest.insert(i);
  auto [h, labels] = induced_subgraph(g, rest);
  // neighbors of v become a clique
  std::vector<int> nbr;
  for (int u : g.neighbors(v)) nbr.push_back(u);
  std::vector<int> inv(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k)
    inv[static_cast<std::size_t>(labels[k])] = static_cast<int>(k) + 1;
  for (std::size_t a = 0; a < nbr.size(); ++a)
    for (std::size_t b = a + 1; b < nbr.size(); ++b) {
      int i = inv[static_cast<std::size_t>(nbr[a])];
      int j = inv[static_cast<std::size_t>(nbr[b])];
      if (!h.has_edge(i, j)) h.add_edge(i, j);
    }
  return h;
}

Coalescence coalesce(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (g1.vertex_count() < 1 || g2.vertex_count() < 1)
    throw std::invalid_argument("coalesce needs nonempty graphs");
  if (!g1.has_vertex(v1))
    throw std::invalid_argument("vertex " + std::to_string(v1) + " out of range in first graph");
  if (!g2.has_vertex(v2))
    throw std::invalid_argument("vertex " + std::to_string(v2) + " out of range in second graph");
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  Coalescence out;
  out.map1.resize(static_cast<std::size_t>(n1) + 1, 0);
  out.map2.resize(static_cast<std::size_t>(n2) + 1, 0);
  for (int i = 1; i <= n1; ++i) out.map1[static_cast<std::size_t>(i)] = i;
  int next = n1 + 1;
  for (int i = 1; i <= n2; ++i)
    out.map2[static_cast<std::size_t>(i)] = (i == v2) ? v1 : next++;
  out.graph = Graph(n1 + n2 - 1);
  for (auto [i, j] : g1.edges()) out.graph.add_edge(i, j);
  for (auto [i, j] : g2.edges())
    out.graph.add_edge(out.map2[static_cast<std::size_t>(i)],
                       out.map2[static_cast<std::size_t>(j)]);
  return out;
}

Graph add_path(const Graph& g, int v1, int v2, int m) {
  if (v1 == v2) throw std::invalid_argument("path endpoints must differ");
  if (!g.has_vertex(v1) || !g.has_vertex(v2))
    throw std::invalid_argument("path endpoint out of range");
  if (m < 1) throw std::invalid_argument("path edge-length must be positive");
  if (m == 1) {
    if (g.has_edge(v1, v2)) return g;
    Graph h = g;
    h.add_edge(v1, v2);
    return h;
  }
  int n = g.vertex_count();
  Graph h(n + m - 1);
  for (auto [i, j] : g.edges()) h.add_edge(i, j);
  int prev = v1;
  for (int k = 1; k < m; ++k) {
    h.add_edge(prev, n + k);
    prev = n + k;
  }
  h.add_edge(prev, v2);
  return h;
}

namespace detail {

namespace {

void bk_extend(const Graph& g, std::vector<int>& r, std::vector<int> p,
               std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of P ∪ X with most neighbors in P, lowest label on ties
  int pivot = 0, best = -1;
  for (const auto* side : {&p, &x})
    for (int u : *side) {
      int cnt = 0;
      for (int w : p)
        if (w != u && g.has_edge(u, w)) ++cnt;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  std::vector<int> candidates;
  for (int u : p)
    if (u == pivot || !g.has_edge(pivot, u)) candidates.push_back(u);
  for (int u : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (w != u && g.has_edge(u, w)) np.push_back(w);
    for (int w : x)
      if (g.has_edge(u, w)) nx.push_back(w);
    r.push_back(u);
    bk_extend(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), u));
    x.insert(std::lower_bound(x.begin(), x.end(), u), u);
  }
}

}  // namespace

std::vector<std::vector<int>> bron_kerbosch(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r, p, x;
  for (int v = 1; v <= g.vertex_count(); ++v) p.push_back(v);
  bk_extend(g, r, std::move(p), std::move(x), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

int largest_near_clique(const Graph& g, int vertex_cap) {
  if (g.vertex_count() < 2) throw std::invalid_argument("largest_near_clique needs n >= 2");
  if (g.vertex_count() > vertex_cap)
    throw capacity_error("largest_near_clique: " + std::to_string(g.vertex_count()) +
                         " vertices exceed cap " + std::to_string(vertex_cap));
  auto cliques = detail::bron_kerbosch(g);
  std::size_t omega = 0;
  for (const auto& c : cliques) omega = std::max(omega, c.size());
  // K_{omega+1} minus an edge exists iff two omega-cliques share omega-1
  // vertices.
  std::vector<const std::vector<int>*> tops;
  for (const auto& c : cliques)
    if (c.size() == omega) tops.push_back(&c);
  for (std::size_t a = 0; a < tops.size(); ++a)
    for (std::size_t b = a + 1; b < tops.size(); ++b) {
      std::vector<int> inter;
      std::set_intersection(tops[a]->begin(), tops[a]->end(), tops[b]->begin(),
                            tops[b]->end(), std::back_inserter(inter));
      if (inter.size() + 1 == omega) return static_cast<int>(omega) + 1;
    }
  return static_cast<int>(omega);
}

bool is_disjoint_union_k2(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  for (const auto& comp : g.components())
    if (comp.size() != 2) return false;
  return true;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0, edges_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::stringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header)
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": duplicate header");
      if (!(ss >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": expected 'p <n> <m>'");
      g = Graph(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header)
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": edge before header");
      int i = 0, j = 0;
      if (!(ss >> i >> j))
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": expected 'e <i> <j>'");
      if (!g.has_vertex(i) || !g.has_vertex(j) || i == j)
        throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                    ": bad endpoints " + std::to_string(i) + " " +
                                    std::to_string(j));
      if (g.has_edge(i, j))
        throw std::invalid_argument("validation error at line " + std::to_string(lineno) +
                                    ": duplicate edge {" + std::to_string(i) + "," +
                                    std::to_string(j) + "}");
      g.add_edge(i, j);
      ++edges_seen;
    } else {
      throw std::invalid_argument("parse error at line " + std::to_string(lineno) +
                                  ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw std::invalid_argument("parse error: missing 'p <n> <m>' header");
  if (edges_seen != m)
    throw std::invalid_argument("validation error: header declares " + std::to_string(m) +
                                " edges, found " + std::to_string(edges_seen));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
  std::stringstream ss(text);
  return read_edge_list(ss);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [i, j] : g.edges()) out << "e " << i << " " << j << "\n";
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

}  // namespace entrypow
