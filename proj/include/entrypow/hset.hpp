#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrypow/chordal.hpp"
#include "entrypow/graph.hpp"

namespace entrypow {

enum class DiscreteSet { empty, naturals, odd_naturals, even_naturals };

std::string to_string(DiscreteSet d);
DiscreteSet discrete_from_string(const std::string& name);

// A set of real exponents of the form D ∪ [t, ∞) with D one of ∅, the
// naturals, the odd naturals, or the even naturals.
struct HSetForm {
  DiscreteSet discrete = DiscreteSet::empty;
  double ray_start = 0.0;

  bool contains(double alpha) const;
  bool subset_of(const HSetForm& other) const;
  // Drops the discrete part when the ray absorbs it.
  HSetForm canonical() const;
  // Discrete members strictly below the ray, in increasing order.
  std::vector<double> discrete_below_ray() const;

  friend bool operator==(const HSetForm&, const HSetForm&) = default;
};

// Exact intersection of two forms; throws std::logic_error when the result
// leaves the representable D ∪ [t, ∞) shape.
HSetForm intersect(const HSetForm& a, const HSetForm& b);
HSetForm union_with_naturals(const HSetForm& a);

// An exponent set that is either known exactly or sandwiched between a
// certified lower set and an upper envelope (lower ⊆ true set ⊆ upper).
struct HSet {
  HSetForm set;  // exact: the set itself; bounded: the certified lower form
  bool exact = true;
  HSetForm lower;
  HSetForm upper;
  std::vector<double> exclusions;  // reals known to lie outside the true set

  static HSet make_exact(HSetForm f);
  static HSet make_bounded(HSetForm lo, HSetForm hi, std::vector<double> excl = {});

  // Certified membership; sound but not complete in bounded mode.
  bool contains(double alpha) const { return set.contains(alpha); }

  friend bool operator==(const HSet&, const HSet&) = default;
};

enum class HSetMethod {
  complete_formula,
  chordal_formula,
  tree,
  cycle,
  bipartite,
  coalescence,
  k2_union,
  triangulation_bounds,
};

std::string to_string(HSetMethod m);

struct HSetReport {
  HSetMethod method = HSetMethod::chordal_formula;
  int omega = 0;         // clique number
  int r = 0;             // largest near-clique order
  std::optional<int> s;  // max separator size (chordal only)
  double ce_plain = 0.0, ce_psi = 0.0, ce_phi = 0.0;
  HSet plain, psi, phi;
};

// Exact critical exponent and H-sets of a chordal graph, via the clique
// Gram formula cross-checked against max(omega - 2, s).
HSetReport critical_exponent_chordal(const Graph& g, int vertex_cap = kDefaultVertexCap);

struct HsetOptions {
  int vertex_cap = kDefaultVertexCap;
};

// Exponent-set report for an arbitrary graph, exact for the classified
// families and sandwiched between triangulation and near-clique bounds
// otherwise. Requires n >= 2 and at least one edge.
HSetReport hset(const Graph& g, const HsetOptions& opt = {});

}  // namespace entrypow
