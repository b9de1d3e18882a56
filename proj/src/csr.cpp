#include "maxplus/csr.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/bounds.hpp"

namespace maxplus {

namespace {

CsrTriple trivial_csr(Eigen::Index n) {
  CsrTriple csr;
  csr.C = csr.S = csr.R = zero_matrix(n);
  csr.gamma = 1;
  csr.period = {zero_matrix(n)};
  return csr;
}

}  // namespace

CsrTriple build_csr(const Matrix& a) {
  const Spectrum s = spectrum(a);
  if (s.lambda.is_bottom()) return trivial_csr(a.rows());
  return build_csr(a, *s.crit);
}

CsrTriple build_csr(const Matrix& a, const CritGraph& subgraph) {
  detail::require_square(a);
  if (subgraph.n != a.rows()) throw std::invalid_argument("build_csr: subgraph dimension mismatch");
  CsrTriple csr;
  csr.lambda = max_cycle_mean(a);
  if (csr.lambda.is_bottom()) throw std::invalid_argument("build_csr: acyclic matrix has no critical subgraph");
  csr.gamma = subgraph.cyclicity;
  csr.nodes = subgraph.nodes;

  const Eigen::Index n = a.rows();
  const Matrix an = normalized(a, csr.lambda);
  const Matrix m = kleene_star(mat_power(an, csr.gamma));
  csr.C = csr.R = csr.S = zero_matrix(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (subgraph.contains_node(static_cast<int>(j))) csr.C(i, j) = m(i, j);
      if (subgraph.contains_node(static_cast<int>(i))) csr.R(i, j) = m(i, j);
      if (subgraph.contains_arc(static_cast<int>(i), static_cast<int>(j))) csr.S(i, j) = a(i, j);
    }
  }
  const Matrix sn = normalized(csr.S, csr.lambda);
  Matrix cs = csr.C;
  for (int r = 1; r <= csr.gamma; ++r) {
    cs = mat_mul(cs, sn);
    csr.period.push_back(mat_mul(cs, csr.R));
  }
  return csr;
}

Matrix csr_at(const CsrTriple& csr, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("csr_at: t must be >= 1, got " + std::to_string(t));
  if (csr.trivial()) return csr.period.front();
  const auto r = static_cast<std::size_t>((t - 1) % csr.gamma);
  return scalar_times(scalar_power(csr.lambda, t), csr.period[r]);
}

Matrix csr_matrix(const Matrix& a) { return csr_at(build_csr(a), 1); }

Matrix nachtigall_matrix(const Matrix& a, const CritGraph& crit) {
  Matrix b = a;
  for (int v : crit.nodes) {
    b.row(v).setConstant(MaxPlus::bottom());
    b.col(v).setConstant(MaxPlus::bottom());
  }
  return b;
}

Matrix nachtigall_matrix(const Matrix& a) {
  const Spectrum s = spectrum(a);
  return s.crit ? nachtigall_matrix(a, *s.crit) : a;
}

int weak_expansion_ceiling(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  const Spectrum s = spectrum(a);
  if (!s.crit) return wielandt_bound(n);
  return std::min(wielandt_bound(n), dm_bound(s.crit->girth, n));
}

WeakExpansion weak_threshold_T1(const Matrix& a, int horizon) {
  detail::require_square(a);
  WeakExpansion w;
  const Spectrum s = spectrum(a);
  w.csr = s.crit ? build_csr(a, *s.crit) : trivial_csr(a.rows());
  w.nachtigall = s.crit ? nachtigall_matrix(a, *s.crit) : a;
  w.ceiling = weak_expansion_ceiling(a);
  if (horizon < 0) horizon = w.csr.gamma;
  w.checked_to = w.ceiling + horizon;

  int last_failure = 0;
  Matrix power = a;
  Matrix b_power = w.nachtigall;
  for (int t = 1; t <= w.checked_to; ++t) {
    if (t > 1) {
      power = mat_mul(power, a);
      b_power = mat_mul(b_power, w.nachtigall);
    }
    if (!mat_equal(power, mat_oplus(csr_at(w.csr, t), b_power))) last_failure = t;
  }
  w.T1 = last_failure + 1;
  return w;
}

namespace {

// First t >= 0 with A^{t+gamma} = lambda^gamma A^t.  Equality at t carries
// over to t + 1 after multiplying by A, so the first hit is the transient.
std::int64_t periodicity_transient(const Matrix& a, const MaxPlus& lambda, int gamma, std::int64_t max_t) {
  std::vector<Matrix> window;  // A^t .. A^{t+gamma}
  window.push_back(identity_matrix(a.rows()));
  for (int k = 1; k <= gamma; ++k) window.push_back(mat_mul(window.back(), a));
  const MaxPlus shift = scalar_power(lambda, gamma);
  for (std::int64_t t = 0; t <= max_t; ++t) {
    if (mat_equal(window.back(), scalar_times(shift, window.front()))) return t;
    window.erase(window.begin());
    window.push_back(mat_mul(window.back(), a));
  }
  throw std::runtime_error("transient exceeds scan limit " + std::to_string(max_t));
}

}  // namespace

std::int64_t transient_T(const Matrix& a, std::int64_t max_t) {
  detail::require_square(a);
  const SccDecomposition d = scc_decompose(associated_digraph(a));
  if (d.components.size() != 1 || !d.components.front().has_cycle())
    throw std::invalid_argument("transient_T: matrix is reducible");
  const CritGraph crit = critical_graph(a);
  return periodicity_transient(a, max_cycle_mean(a), crit.cyclicity, max_t);
}

Matrix boolean_matrix(int n, const ArcSet& arcs) {
  Matrix m = zero_matrix(n);
  for (const auto& [i, j] : arcs) m(i, j) = MaxPlus::unit();
  return m;
}

std::int64_t crit_graph_index(const CritGraph& crit, std::int64_t max_t) {
  const int k = static_cast<int>(crit.nodes.size());
  std::vector<int> local(crit.n, -1);
  for (int idx = 0; idx < k; ++idx) local[crit.nodes[idx]] = idx;
  ArcSet arcs;
  for (const auto& [i, j] : crit.arcs) arcs.emplace(local[i], local[j]);
  return periodicity_transient(boolean_matrix(k, arcs), MaxPlus::unit(), crit.cyclicity, max_t);
}

CritRowColTransient crit_row_col_transient(const Matrix& a) {
  detail::require_square(a);
  const Spectrum s = spectrum(a);
  if (!s.crit) throw std::domain_error("crit_row_col_transient: digraph is acyclic");
  const CsrTriple csr = build_csr(a, *s.crit);
  const int n = static_cast<int>(a.rows());
  const int until = weak_expansion_ceiling(a) + csr.gamma;

  std::vector<int> row_fail(n, 0), col_fail(n, 0);
  Matrix power = a;
  for (int t = 1; t <= until; ++t) {
    if (t > 1) power = mat_mul(power, a);
    const Matrix term = csr_at(csr, t);
    for (int v : s.crit->nodes) {
      if (!mat_equal(power.row(v), term.row(v))) row_fail[v] = t;
      if (!mat_equal(power.col(v), term.col(v))) col_fail[v] = t;
    }
  }
  CritRowColTransient out;
  out.per_row.assign(n, 0);
  out.per_col.assign(n, 0);
  for (int v : s.crit->nodes) {
    out.per_row[v] = row_fail[v] + 1;
    out.per_col[v] = col_fail[v] + 1;
    out.value = std::max({out.value, out.per_row[v], out.per_col[v]});
  }
  return out;
}

}  // namespace maxplus
