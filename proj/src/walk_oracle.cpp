#include <algorithm>
#include <array>

#include "maxplus/bounds.hpp"
#include "maxplus/csr.hpp"
#include "maxplus/extremal.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

std::optional<TwiceOptimalWalk> twice_optimal_walk(const Matrix& a, int i, int j, std::int64_t t) {
  detail::require_square(a);
  const int n = static_cast<int>(a.rows());
  if (n > kWalkOracleLimit) throw std::length_error("twice_optimal_walk: n exceeds " + std::to_string(kWalkOracleLimit));
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("twice_optimal_walk: node index out of range");
  if (t < 1) throw std::invalid_argument("twice_optimal_walk: t must be >= 1");

  const Spectrum s = spectrum(a);
  if (!s.crit) throw std::domain_error("twice_optimal_walk: digraph is acyclic");
  const int g = s.crit->girth;
  const auto z0_cycles = cycles_of_length(associated_digraph(a).restricted_to(s.crit->arcs), g);
  if (z0_cycles.size() != 1) throw std::domain_error("twice_optimal_walk: critical cycle of length g is not unique");
  const auto& z0 = z0_cycles.front().nodes;
  ArcSet z0_arcs;
  for (std::size_t k = 0; k < z0.size(); ++k) z0_arcs.emplace(z0[k], z0[(k + 1) % z0.size()]);
  std::vector<bool> on_z0(n, false);
  for (int v : z0) on_z0[v] = true;

  const Matrix an = normalized(a, s.lambda);
  const MaxPlus target = csr_at(build_csr(an, critical_subgraph(an, z0_arcs)), t)(i, j);
  if (target.is_bottom()) return std::nullopt;

  // best[L][v][f]: maximal weight of a walk i -> v of length L, f = visited Z0.
  struct Cell {
    MaxPlus weight;
    int parent = -1;
    int parent_flag = 0;
  };
  using Layer = std::vector<std::array<Cell, 2>>;
  std::vector<Layer> layers;
  layers.emplace_back(n);
  layers[0][i][on_z0[i] ? 1 : 0].weight = MaxPlus::unit();

  const int residue = static_cast<int>(t % g);
  const std::int64_t cap = t + static_cast<std::int64_t>(g) * (n * n + 2) + 2 * n;
  for (std::int64_t len = 0; len <= cap; ++len) {
    const Layer& cur = layers.back();
    if (len % g == residue && cur[j][1].weight == target) {
      TwiceOptimalWalk walk;
      walk.length = static_cast<int>(len);
      walk.weight = otimes(cur[j][1].weight, scalar_power(s.lambda, len));
      walk.g = g;
      int v = j, f = 1;
      for (std::int64_t k = len; k >= 0; --k) {
        walk.nodes.push_back(v);
        const Cell& c = layers[k][v][f];
        v = c.parent;
        f = c.parent_flag;
      }
      std::reverse(walk.nodes.begin(), walk.nodes.end());
      const int bound = n >= 2 ? std::min(wielandt_bound(n), dm_bound(g, n)) : wielandt_bound(n);
      walk.interesting = walk.length == bound + g - 1;
      return walk;
    }
    if (len % g == residue && target < cur[j][1].weight)
      throw InternalError("twice_optimal_walk: walk heavier than the CSR entry");
    Layer next(n);
    for (int u = 0; u < n; ++u)
      for (int f = 0; f < 2; ++f) {
        if (cur[u][f].weight.is_bottom()) continue;
        for (int v = 0; v < n; ++v) {
          if (an(u, v).is_bottom()) continue;
          const int nf = (f || on_z0[v]) ? 1 : 0;
          const MaxPlus w = otimes(cur[u][f].weight, an(u, v));
          Cell& c = next[v][nf];
          if (c.weight < w) c = Cell{w, u, f};
        }
      }
    layers.push_back(std::move(next));
  }
  throw InternalError("twice_optimal_walk: no walk reaches the CSR entry within the search cap");
}

}  // namespace maxplus
