#pragma once

#include <optional>
#include <vector>

#include "maxplus/digraph.hpp"
#include "maxplus/matrix.hpp"

namespace maxplus {

/// A completely reducible subgraph of the critical graph, by default the
/// whole critical graph.  Every node lies on one of its cycles.
struct CritGraph {
  int n = 0;                // dimension of the ambient matrix
  std::vector<int> nodes;   // sorted
  ArcSet arcs;
  SccDecomposition scc;     // components over `nodes` only
  int girth = 0;            // maximal girth over the components
  int cyclicity = 0;        // lcm of the component cyclicities

  bool contains_node(int v) const;
  bool contains_arc(int i, int j) const { return arcs.count({i, j}) > 0; }
  bool strongly_connected() const { return scc.components.size() == 1; }
};

/// Builds the structure for an arc subset of crit(A).  Throws
/// std::invalid_argument unless the subset is non-empty, contained in the
/// critical graph and completely reducible.
CritGraph critical_subgraph(const Matrix& a, const ArcSet& arcs);

struct Spectrum {
  MaxPlus lambda;                 // -inf iff the digraph is acyclic
  std::optional<CritGraph> crit;  // empty iff lambda is -inf
};

/// Maximum cycle mean, by Karp's recurrence on each strongly connected
/// component in exact arithmetic.  -inf for acyclic digraphs.
MaxPlus max_cycle_mean(const Matrix& a);

/// Nodes and arcs of the cycles attaining the maximum cycle mean.  Throws
/// std::domain_error for acyclic input.
CritGraph critical_graph(const Matrix& a);

Spectrum spectrum(const Matrix& a);

/// lambda^- (x) A, for lambda finite.
Matrix normalized(const Matrix& a, const MaxPlus& lambda);

struct Visualization {
  DiagonalScaling scaling;
  Matrix scaled;  // D^{-1} A D
};

/// A strict visualization D^{-1} A D: every entry <= lambda with equality
/// exactly on the critical arcs.  Throws std::domain_error for acyclic input;
/// throws maxplus::InternalError if the construction fails its postcondition.
Visualization visualize(const Matrix& a);

bool is_visualized(const Matrix& a);
bool is_strictly_visualized(const Matrix& a);

/// Raised when a postcondition the library guarantees is violated.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxplus
