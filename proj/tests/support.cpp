#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace oracle {

Value raw(const MaxPlus& a) { return a.is_bottom() ? Value{} : Value{a.value()}; }
MaxPlus wrap(const Value& v) { return v ? MaxPlus(*v) : MaxPlus::bottom(); }

namespace {

void improve(Value& best, const Value& candidate) {
  if (candidate && (!best || *best < *candidate)) best = candidate;
}

Value add(const Value& a, const Value& b) {
  if (!a || !b) return {};
  return Rational(*a + *b);
}

}  // namespace

Matrix product(const Matrix& a, const Matrix& b) {
  const auto n = a.rows(), m = b.cols(), k = a.cols();
  Matrix out(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      Value best;
      for (Eigen::Index l = 0; l < k; ++l) improve(best, add(raw(a(i, l)), raw(b(l, j))));
      out(i, j) = wrap(best);
    }
  return out;
}

Matrix power(const Matrix& a, int t) {
  const auto n = a.rows();
  // layer[v]: best weight of a walk of the current length from the source to v.
  Matrix out(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    std::vector<Value> layer(n);
    layer[s] = Rational(0);
    for (int step = 0; step < t; ++step) {
      std::vector<Value> next(n);
      for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v) improve(next[v], add(layer[u], raw(a(u, v))));
      layer = std::move(next);
    }
    for (Eigen::Index v = 0; v < n; ++v) out(s, v) = wrap(layer[v]);
  }
  return out;
}

std::vector<SimpleCycle> simple_cycles(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<SimpleCycle> out;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int, Rational)> dfs = [&](int start, int u, Rational w) {
    for (int v = start; v < n; ++v) {
      if (a(u, v).is_bottom()) continue;
      const Rational nw = w + a(u, v).value();
      if (v == start) {
        out.push_back({path, nw});
      } else if (!on_path[v]) {
        on_path[v] = true;
        path.push_back(v);
        dfs(start, v, nw);
        path.pop_back();
        on_path[v] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(s, s, Rational(0));
  }
  return out;
}

Value max_cycle_mean(const Matrix& a) {
  Value best;
  for (const auto& c : simple_cycles(a)) improve(best, Rational(c.weight / static_cast<long>(c.nodes.size())));
  return best;
}

namespace {

std::vector<SimpleCycle> critical_cycles(const Matrix& a) {
  const Value lambda = max_cycle_mean(a);
  std::vector<SimpleCycle> out;
  if (!lambda) return out;
  for (const auto& c : simple_cycles(a))
    if (c.weight == *lambda * static_cast<long>(c.nodes.size())) out.push_back(c);
  return out;
}

}  // namespace

std::set<std::pair<int, int>> critical_arcs(const Matrix& a) {
  std::set<std::pair<int, int>> arcs;
  for (const auto& c : critical_cycles(a))
    for (std::size_t k = 0; k < c.nodes.size(); ++k) arcs.emplace(c.nodes[k], c.nodes[(k + 1) % c.nodes.size()]);
  return arcs;
}

int critical_cyclicity(const Matrix& a) {
  const auto cycles = critical_cycles(a);
  const int n = static_cast<int>(a.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& c : cycles)
    for (int v : c.nodes) parent[find(v)] = find(c.nodes.front());
  std::vector<int> gcd_of(n, 0);
  for (const auto& c : cycles) {
    int& g = gcd_of[find(c.nodes.front())];
    g = std::gcd(g, static_cast<int>(c.nodes.size()));
  }
  int result = 1;
  for (int g : gcd_of)
    if (g > 0) result = std::lcm(result, g);
  return result;
}

std::vector<Matrix> walk_csr(const Matrix& a, int gamma, const std::set<int>& critical_nodes) {
  const int n = static_cast<int>(a.rows());
  const int max_len = 3 * n * n * gamma + 2 * n + gamma;
  std::vector<Matrix> out(gamma, maxplus::zero_matrix(n));
  for (int s = 0; s < n; ++s) {
    // layer[v][f], f = whether a critical node has been visited.
    std::vector<std::array<Value, 2>> layer(n);
    layer[s][critical_nodes.count(s) ? 1 : 0] = Rational(0);
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::array<Value, 2>> next(n);
      for (int u = 0; u < n; ++u)
        for (int f = 0; f < 2; ++f)
          for (int v = 0; v < n; ++v) {
            const int nf = (f || critical_nodes.count(v)) ? 1 : 0;
            improve(next[v][nf], add(layer[u][f], raw(a(u, v))));
          }
      layer = std::move(next);
      Matrix& m = out[len % gamma];
      for (int v = 0; v < n; ++v) {
        Value cur = raw(m(s, v));
        improve(cur, layer[v][1]);
        m(s, v) = wrap(cur);
      }
    }
  }
  return out;
}

int weak_threshold(const Matrix& a, const std::vector<Matrix>& csr_terms, const Matrix& nachtigall, int until) {
  int last_failure = 0;
  for (int t = 1; t <= until; ++t) {
    const Matrix lhs = power(a, t);
    const Matrix b = power(nachtigall, t);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        Value rhs = raw(csr_terms[t](i, j));
        improve(rhs, raw(b(i, j)));
        if (raw(lhs(i, j)) != rhs) last_failure = t;
      }
  }
  return last_failure + 1;
}

}  // namespace oracle

namespace testgen {

maxplus::Rational random_rational(std::mt19937_64& rng, int numerator, int denominator) {
  std::uniform_int_distribution<long> num(-numerator, numerator), den(1, denominator);
  maxplus::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

maxplus::Matrix random_matrix(std::mt19937_64& rng, int n, const EntryShape& shape) {
  std::bernoulli_distribution present(shape.density);
  maxplus::Matrix a = maxplus::zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (present(rng)) a(i, j) = maxplus::MaxPlus(random_rational(rng, shape.numerator, shape.denominator));
  return a;
}

maxplus::Matrix random_cyclic_matrix(std::mt19937_64& rng, int n, const EntryShape& shape) {
  for (;;) {
    maxplus::Matrix a = random_matrix(rng, n, shape);
    if (oracle::max_cycle_mean(a)) return a;
  }
}

}  // namespace testgen
