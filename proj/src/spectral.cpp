#include "maxplus/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxplus {

bool CritGraph::contains_node(int v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

namespace {

// Karp's maximum mean for one strongly connected component with >= 1 arc.
// D_k(v) is the best weight of a k-arc walk from the component's first node to v;
// lambda = max_v min_k (D_m(v) - D_k(v)) / (m - k).
Rational karp_component(const WeightedDigraph& g, const std::vector<int>& comp_of, int comp,
                        const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  const int n = g.size();
  std::vector<std::vector<MaxPlus>> walk(m + 1, std::vector<MaxPlus>(n));
  walk[0][nodes.front()] = MaxPlus::unit();
  for (int k = 1; k <= m; ++k) {
    for (int u : nodes) {
      if (walk[k - 1][u].is_bottom()) continue;
      for (int idx : g.out_arcs(u)) {
        const Arc& arc = g.arcs()[idx];
        if (comp_of[arc.to] != comp) continue;
        walk[k][arc.to] = oplus(walk[k][arc.to], otimes(walk[k - 1][u], MaxPlus(arc.weight)));
      }
    }
  }
  std::optional<Rational> best;
  for (int v : nodes) {
    if (walk[m][v].is_bottom()) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < m; ++k) {
      if (walk[k][v].is_bottom()) continue;
      Rational mean = (walk[m][v].value() - walk[k][v].value()) / Rational(m - k);
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!best || *worst > *best)) best = worst;
  }
  if (!best) throw InternalError("karp: component without a closed walk of full length");
  return *best;
}

CritGraph build_crit(int n, const WeightedDigraph& full, const ArcSet& arcs) {
  CritGraph c;
  c.n = n;
  c.arcs = arcs;
  std::vector<bool> is_node(n, false);
  for (const auto& [i, j] : arcs) is_node[i] = is_node[j] = true;
  for (int v = 0; v < n; ++v)
    if (is_node[v]) c.nodes.push_back(v);

  const WeightedDigraph sub = full.restricted_to(arcs);
  SccDecomposition all = scc_decompose(sub);
  SccDecomposition kept;
  kept.component_of.assign(n, -1);
  for (auto& comp : all.components) {
    if (!is_node[comp.nodes.front()]) continue;
    if (!comp.has_cycle())
      throw std::invalid_argument("subgraph is not completely reducible: node " + std::to_string(comp.nodes.front() + 1) +
                                  " lies on no cycle");
    for (int v : comp.nodes) kept.component_of[v] = static_cast<int>(kept.components.size());
    kept.components.push_back(std::move(comp));
  }
  for (const auto& [i, j] : arcs)
    if (kept.component_of[i] != kept.component_of[j])
      throw std::invalid_argument("subgraph is not completely reducible: arc (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") joins two components");
  c.scc = std::move(kept);
  c.girth = maximal_girth(c.scc);
  c.cyclicity = global_cyclicity(c.scc);
  return c;
}

}  // namespace

MaxPlus max_cycle_mean(const Matrix& a) {
  const WeightedDigraph g = associated_digraph(a);
  const SccDecomposition d = scc_decompose(g);
  MaxPlus best;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const Component& comp = d.components[c];
    if (!comp.has_cycle()) continue;
    best = oplus(best, MaxPlus(karp_component(g, d.component_of, static_cast<int>(c), comp.nodes)));
  }
  return best;
}

Matrix normalized(const Matrix& a, const MaxPlus& lambda) { return scalar_times(negate(lambda), a); }

CritGraph critical_graph(const Matrix& a) {
  const MaxPlus lambda = max_cycle_mean(a);
  if (lambda.is_bottom()) throw std::domain_error("critical_graph: digraph is acyclic");
  const Matrix an = normalized(a, lambda);
  const Matrix plus = mat_mul(an, kleene_star(an));
  ArcSet arcs;
  for (Eigen::Index i = 0; i < an.rows(); ++i)
    for (Eigen::Index j = 0; j < an.cols(); ++j)
      if (otimes(an(i, j), plus(j, i)) == MaxPlus::unit()) arcs.emplace(static_cast<int>(i), static_cast<int>(j));
  return build_crit(static_cast<int>(a.rows()), associated_digraph(a), arcs);
}

CritGraph critical_subgraph(const Matrix& a, const ArcSet& arcs) {
  if (arcs.empty()) throw std::invalid_argument("critical_subgraph: empty arc set");
  const CritGraph crit = critical_graph(a);
  for (const auto& arc : arcs)
    if (!crit.contains_arc(arc.first, arc.second))
      throw std::invalid_argument("critical_subgraph: arc (" + std::to_string(arc.first + 1) + "," +
                                  std::to_string(arc.second + 1) + ") is not critical");
  return build_crit(static_cast<int>(a.rows()), associated_digraph(a), arcs);
}

Spectrum spectrum(const Matrix& a) {
  Spectrum s;
  s.lambda = max_cycle_mean(a);
  if (s.lambda.is_finite()) s.crit = critical_graph(a);
  return s;
}

namespace {

bool check_visualized(const Matrix& a, bool strict) {
  const Spectrum s = spectrum(a);
  if (s.lambda.is_bottom()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const bool critical = s.crit->contains_arc(static_cast<int>(i), static_cast<int>(j));
      if (a(i, j) > s.lambda) return false;
      if (critical && !(a(i, j) == s.lambda)) return false;
      if (strict && !critical && a(i, j) == s.lambda) return false;
    }
  return true;
}

}  // namespace

bool is_visualized(const Matrix& a) { return check_visualized(a, false); }
bool is_strictly_visualized(const Matrix& a) { return check_visualized(a, true); }

Visualization visualize(const Matrix& a) {
  const Spectrum s = spectrum(a);
  if (s.lambda.is_bottom()) throw std::domain_error("visualize: digraph is acyclic");
  const Eigen::Index n = a.rows();
  Matrix an = normalized(a, s.lambda);

  // Fill missing arcs with a weight low enough that no new cycle reaches
  // mean 0; lambda and the critical graph are unchanged and the star becomes
  // finite everywhere.
  Rational top(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (an(i, j).is_finite() && an(i, j).value() > top) top = an(i, j).value();
  const MaxPlus filler(Rational(-(Rational(static_cast<long>(n)) * top) - 1));
  Matrix dense = an;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (dense(i, j).is_bottom()) dense(i, j) = filler;

  // Each column x of the star satisfies an_ij + x_j <= x_i; column i is
  // strict on every non-critical arc leaving i.  Their average is strict on
  // all non-critical arcs and tight on the critical ones.
  const Matrix star = kleene_star(dense);
  std::vector<Rational> d(n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) d[i] += star(i, k).value();
    d[i] /= Rational(static_cast<long>(n));
  }
  DiagonalScaling scaling(std::move(d));
  Matrix scaled = scale(a, scaling);
  if (!is_strictly_visualized(scaled)) throw InternalError("visualize: constructed scaling is not a strict visualization");
  return {std::move(scaling), std::move(scaled)};
}

}  // namespace maxplus
