#pragma once

#include <cstdint>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

/// CSR terms of A with respect to a completely reducible subgraph of crit(A).
///
/// M = ((lambda^- A)^gamma)*, C keeps the columns of M at subgraph nodes,
/// R keeps the rows of M at subgraph nodes, S keeps the entries of A on
/// subgraph arcs.  C S^t R is purely pseudoperiodic for t >= 1, so only the
/// gamma normalized values C (lambda^- S)^r R, r = 1..gamma, are stored.
/// When lambda = -inf every term is the zero matrix.
struct CsrTriple {
  Matrix C;
  Matrix S;
  Matrix R;
  MaxPlus lambda;
  int gamma = 1;
  std::vector<int> nodes;       // nodes of the defining subgraph
  std::vector<Matrix> period;   // period[r - 1] = C (lambda^- S)^r R

  Eigen::Index size() const { return C.rows(); }
  bool trivial() const { return lambda.is_bottom(); }
};

/// CSR terms for the full critical graph (or the all -inf convention when the
/// digraph is acyclic).
CsrTriple build_csr(const Matrix& a);

/// CSR terms for a given subgraph of crit(A), e.g. one critical component.
CsrTriple build_csr(const Matrix& a, const CritGraph& subgraph);

/// C S^t R for t >= 1.
Matrix csr_at(const CsrTriple& csr, std::int64_t t);

/// Shorthand for csr_at(build_csr(a), 1), the matrix written CSR[A].
Matrix csr_matrix(const Matrix& a);

/// A with every row and column of a critical node set to -inf.
Matrix nachtigall_matrix(const Matrix& a, const CritGraph& crit);
Matrix nachtigall_matrix(const Matrix& a);

/// min(Wi(n), DM(g, n)) with g the maximal girth of crit(A); Wi(n) when A is
/// acyclic.  Every t at or above this satisfies A^t = CS^tR (+) B_N^t.
int weak_expansion_ceiling(const Matrix& a);

struct WeakExpansion {
  CsrTriple csr;
  Matrix nachtigall;
  int T1 = 1;
  int ceiling = 0;      // scan ceiling from the bound
  int checked_to = 0;   // last t compared
};

/// Weak CSR threshold T1: least T >= 1 with A^t = CS^tR (+) B_N^t for all
/// t >= T.  Scans t = 1 .. ceiling + horizon (horizon defaults to gamma) and
/// reports one past the last mismatch.
WeakExpansion weak_threshold_T1(const Matrix& a, int horizon = -1);

inline constexpr std::int64_t kDefaultTransientScanLimit = 20000;

/// Least T >= 0 with A^{t+gamma} = lambda^gamma (x) A^t for all t >= T, with
/// gamma the cyclicity of crit(A).  Requires an irreducible A (strongly
/// connected digraph carrying a cycle); throws std::invalid_argument
/// otherwise and std::runtime_error if no T <= max_t exists.
std::int64_t transient_T(const Matrix& a, std::int64_t max_t = kDefaultTransientScanLimit);

/// Transient of the 0/-inf matrix of a critical (sub)graph restricted to its
/// own nodes, i.e. the Boolean index of that digraph.
std::int64_t crit_graph_index(const CritGraph& crit, std::int64_t max_t = kDefaultTransientScanLimit);

/// The 0/-inf matrix over all n nodes carrying exactly the given arcs.
Matrix boolean_matrix(int n, const ArcSet& arcs);

struct CritRowColTransient {
  int value = 1;              // max over the critical rows and columns
  std::vector<int> per_row;   // 0 for non-critical rows
  std::vector<int> per_col;   // 0 for non-critical columns
};

/// Transient of the critical rows and columns: least T >= 1 such that for
/// all t >= T, (A^t)_{i.} = (CS^tR)_{i.} for critical i and likewise for
/// critical columns.  Throws std::domain_error for acyclic input.
CritRowColTransient crit_row_col_transient(const Matrix& a);

}  // namespace maxplus
