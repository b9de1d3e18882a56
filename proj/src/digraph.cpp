#include "maxplus/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace maxplus {

void WeightedDigraph::add_arc(int from, int to, Rational weight) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw std::invalid_argument("arc endpoint out of range");
  if (has_arc(from, to))
    throw std::invalid_argument("duplicate arc (" + std::to_string(from + 1) + "," + std::to_string(to + 1) + ")");
  const int idx = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{from, to, std::move(weight)});
  out_[from].push_back(idx);
  in_[to].push_back(idx);
}

bool WeightedDigraph::has_arc(int from, int to) const {
  return std::any_of(out_[from].begin(), out_[from].end(), [&](int idx) { return arcs_[idx].to == to; });
}

ArcSet WeightedDigraph::arc_set() const {
  ArcSet out;
  for (const auto& arc : arcs_) out.emplace(arc.from, arc.to);
  return out;
}

WeightedDigraph WeightedDigraph::restricted_to(const ArcSet& keep) const {
  WeightedDigraph out(n_);
  for (const auto& arc : arcs_)
    if (keep.count({arc.from, arc.to})) out.add_arc(arc.from, arc.to, arc.weight);
  return out;
}

WeightedDigraph associated_digraph(const Matrix& a) {
  detail::require_square(a);
  WeightedDigraph g(static_cast<int>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) g.add_arc(static_cast<int>(i), static_cast<int>(j), a(i, j).value());
  return g;
}

namespace {

// Tarjan's algorithm; components come out in reverse topological order.
std::vector<std::vector<int>> tarjan(const WeightedDigraph& g) {
  const int n = g.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int idx : g.out_arcs(v)) {
      const int w = g.arcs()[idx].to;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comps;
}

// BFS distances from source using only arcs inside the component.
std::vector<int> bfs_levels(const WeightedDigraph& g, const std::vector<int>& comp_of, int comp, int source) {
  std::vector<int> level(g.size(), -1);
  std::queue<int> q;
  level[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int idx : g.out_arcs(u)) {
      const int v = g.arcs()[idx].to;
      if (comp_of[v] != comp || level[v] >= 0) continue;
      level[v] = level[u] + 1;
      q.push(v);
    }
  }
  return level;
}

}  // namespace

SccDecomposition scc_decompose(const WeightedDigraph& g) {
  SccDecomposition d;
  auto comps = tarjan(g);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  d.component_of.assign(g.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) d.component_of[v] = static_cast<int>(c);

  for (std::size_t c = 0; c < comps.size(); ++c) {
    Component comp{comps[c], std::nullopt, std::nullopt};
    const int ci = static_cast<int>(c);
    bool internal_arc = false;
    for (int u : comp.nodes)
      for (int idx : g.out_arcs(u))
        if (d.component_of[g.arcs()[idx].to] == ci) internal_arc = true;
    if (internal_arc) {
      // Cyclicity from one BFS: gcd of level(u) + 1 - level(v) over internal arcs.
      const auto level = bfs_levels(g, d.component_of, ci, comp.nodes.front());
      long gcd = 0;
      for (int u : comp.nodes)
        for (int idx : g.out_arcs(u)) {
          const int v = g.arcs()[idx].to;
          if (d.component_of[v] == ci) gcd = std::gcd(gcd, static_cast<long>(std::abs(level[u] + 1 - level[v])));
        }
      comp.cyclicity = static_cast<int>(gcd);

      int girth = g.size() + 1;
      for (int s : comp.nodes) {
        const auto dist = bfs_levels(g, d.component_of, ci, s);
        for (int idx : g.in_arcs(s)) {
          const int u = g.arcs()[idx].from;
          if (d.component_of[u] == ci) girth = std::min(girth, dist[u] + 1);
        }
      }
      comp.girth = girth;
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

std::vector<const Component*> SccDecomposition::cyclic_components() const {
  std::vector<const Component*> out;
  for (const auto& c : components)
    if (c.has_cycle()) out.push_back(&c);
  return out;
}

int maximal_girth(const SccDecomposition& d) {
  int best = 0;
  for (const auto& c : d.components)
    if (c.girth) best = std::max(best, *c.girth);
  if (best == 0) throw std::domain_error("maximal_girth: graph is acyclic");
  return best;
}

int global_cyclicity(const SccDecomposition& d) {
  if (d.components.empty()) throw std::domain_error("global_cyclicity: empty graph");
  long l = 1;
  for (const auto& c : d.components) {
    if (!c.cyclicity) throw std::domain_error("global_cyclicity: component without a cycle");
    l = std::lcm(l, static_cast<long>(*c.cyclicity));
  }
  return static_cast<int>(l);
}

namespace {

// Depth-first extension of simple paths rooted at their smallest node.
void extend_paths(const WeightedDigraph& g, int root, int max_length, std::vector<int>& path, std::vector<bool>& on_path,
                  const Rational& weight, std::vector<Cycle>& out, int exact_length) {
  const int u = path.back();
  for (int idx : g.out_arcs(u)) {
    const Arc& arc = g.arcs()[idx];
    if (arc.to == root) {
      const int len = static_cast<int>(path.size());
      if (exact_length == 0 || len == exact_length) out.push_back(Cycle{path, len, Rational(weight + arc.weight)});
      continue;
    }
    if (arc.to < root || on_path[arc.to] || static_cast<int>(path.size()) >= max_length) continue;
    on_path[arc.to] = true;
    path.push_back(arc.to);
    extend_paths(g, root, max_length, path, on_path, Rational(weight + arc.weight), out, exact_length);
    path.pop_back();
    on_path[arc.to] = false;
  }
}

std::vector<Cycle> collect_cycles(const WeightedDigraph& g, int max_length, int exact_length) {
  std::vector<Cycle> out;
  std::vector<bool> on_path(g.size(), false);
  for (int root = 0; root < g.size(); ++root) {
    std::vector<int> path{root};
    on_path[root] = true;
    extend_paths(g, root, max_length, path, on_path, Rational(0), out, exact_length);
    on_path[root] = false;
  }
  return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const WeightedDigraph& g, int max_n) {
  if (g.size() > max_n)
    throw std::length_error("enumerate_cycles: " + std::to_string(g.size()) + " nodes exceeds limit " +
                            std::to_string(max_n));
  return collect_cycles(g, g.size(), 0);
}

std::vector<Cycle> cycles_of_length(const WeightedDigraph& g, int length) {
  if (length < 1) return {};
  return collect_cycles(g, length, length);
}

std::string to_dot(const WeightedDigraph& g, const ArcSet& highlighted) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < g.size(); ++v) os << "  " << v + 1 << ";\n";
  for (const auto& arc : g.arcs()) {
    os << "  " << arc.from + 1 << " -> " << arc.to + 1 << " [label=\"" << to_string(arc.weight) << "\"";
    if (highlighted.count({arc.from, arc.to})) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxplus
