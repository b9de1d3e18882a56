#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

struct Arc {
  int from = 0;
  int to = 0;
  Rational weight;
};

using ArcSet = std::set<std::pair<int, int>>;

/// Weighted digraph on nodes 0..n-1 with at most one arc per ordered pair.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(int n) : n_(n), out_(n), in_(n) {}

  /// Adds (from, to); throws std::invalid_argument on a duplicate arc.
  void add_arc(int from, int to, Rational weight);

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Indices into arcs() of the arcs leaving / entering a node.
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }
  bool has_arc(int from, int to) const;
  ArcSet arc_set() const;

  /// The subgraph keeping only the listed arcs (weights preserved).
  WeightedDigraph restricted_to(const ArcSet& keep) const;

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Arcs are exactly the finite entries of A.
WeightedDigraph associated_digraph(const Matrix& a);

/// One strongly connected component.  girth is the minimal cycle length and
/// cyclicity the gcd of all cycle lengths; both are empty for a single node
/// without a loop.
struct Component {
  std::vector<int> nodes;
  std::optional<int> girth;
  std::optional<int> cyclicity;

  bool has_cycle() const { return girth.has_value(); }
};

struct SccDecomposition {
  std::vector<Component> components;
  std::vector<int> component_of;  // node -> index into components

  /// Components that contain at least one cycle.
  std::vector<const Component*> cyclic_components() const;
};

SccDecomposition scc_decompose(const WeightedDigraph& g);

/// Maximal girth: the largest component girth.  This is not the usual girth
/// of a reducible graph (which would be the lcm of the component girths).
/// Throws std::domain_error when no component has a cycle.
int maximal_girth(const SccDecomposition& d);

/// lcm of the component cyclicities.  Throws std::domain_error if any
/// component is acyclic or if there are no components.
int global_cyclicity(const SccDecomposition& d);

struct Cycle {
  std::vector<int> nodes;  // starts at its smallest node, closing arc implied
  int length = 0;
  Rational weight;
};

inline constexpr int kDefaultCycleEnumerationLimit = 8;

/// All elementary cycles, each listed once (rotation starting at its smallest
/// node).  Exponential; refuses graphs with more than max_n nodes by throwing
/// std::length_error.
std::vector<Cycle> enumerate_cycles(const WeightedDigraph& g, int max_n = kDefaultCycleEnumerationLimit);

/// Elementary cycles of exactly the given length.  Depth-bounded, so usable
/// without a node limit when the length is small.
std::vector<Cycle> cycles_of_length(const WeightedDigraph& g, int length);

/// Graphviz rendering; highlighted arcs are drawn bold red.
std::string to_dot(const WeightedDigraph& g, const ArcSet& highlighted = {});

}  // namespace maxplus
