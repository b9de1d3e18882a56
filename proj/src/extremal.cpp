#include "maxplus/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxplus/bounds.hpp"
#include "maxplus/csr.hpp"
#include "maxplus/digraph.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

Numbering identity_numbering(int n) {
  Numbering p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void validate_numbering(const Numbering& p, int n) {
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("numbering has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("numbering is not a permutation");
    seen[v] = true;
  }
}

Matrix renumber(const Matrix& a, const Numbering& p) {
  detail::require_square(a);
  validate_numbering(p, static_cast<int>(a.rows()));
  const Eigen::Index n = a.rows();
  Matrix out(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) out(k, l) = a(p[k], p[l]);
  return out;
}

Numbering parse_numbering(const std::string& text) {
  Numbering p;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      p.push_back(v - 1);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed numbering entry '" + item + "'");
    }
  }
  return p;
}

std::string format_numbering(const Numbering& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p[k] + 1);
  return out;
}

bool in_a1_pattern(int i, int j, int g, int n) {
  return (j == i + 1 && i <= n - 2) || (i == n - 1 && j == 0) || (i == g - 1 && j == 0);
}

bool in_b1_pattern(int i, int j, int g) {
  // 1-based: i, j > g and j = i + 1 (mod g).
  return i >= g && j >= g && ((j + 1) - (i + 1) - 1) % g == 0;
}

Decomposition decompose(const Matrix& a, int g, const Numbering& numbering) {
  const int n = static_cast<int>(a.rows());
  if (g < 1 || g > n) throw std::invalid_argument("decompose: need 1 <= g <= n");
  const Matrix p = renumber(a, numbering);
  Decomposition d{zero_matrix(n), zero_matrix(n), zero_matrix(n), g, numbering};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool a1 = in_a1_pattern(i, j, g, n);
      const bool b1 = in_b1_pattern(i, j, g);
      if (a1) d.A1(i, j) = p(i, j);
      if (b1) d.B1(i, j) = p(i, j);
      if (!(a1 && p(i, j).is_finite()) && !(b1 && p(i, j).is_finite())) d.A2(i, j) = p(i, j);
    }
  return d;
}

std::string to_string(WielandtCase c) { return c == WielandtCase::kGirthN ? "n" : "n-1"; }

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

ConditionResult check_dominated(const Matrix& lower, const Matrix& upper) {
  ConditionResult r;
  r.holds = true;
  for (Eigen::Index i = 0; i < lower.rows(); ++i)
    for (Eigen::Index j = 0; j < lower.cols(); ++j)
      if (!strictly_below(lower(i, j), upper(i, j))) {
        r.holds = false;
        r.detail = "entry " + pair_label(static_cast<int>(i), static_cast<int>(j)) + ": " + to_string(lower(i, j)) +
                   " not below " + to_string(upper(i, j));
        return r;
      }
  return r;
}

// Is the cycle p[0] -> p[1] -> ... -> p[len-1] -> p[0] made of critical arcs?
bool leading_cycle_critical(const CritGraph& crit, const Numbering& p, int len) {
  for (int k = 0; k < len; ++k)
    if (!crit.contains_arc(p[k], p[(k + 1) % len])) return false;
  return true;
}

std::vector<Numbering> rotations_of_max_hamiltonians(const Matrix& a) {
  std::vector<Numbering> out;
  const int n = static_cast<int>(a.rows());
  for (const auto& cycle : max_weight_hamiltonian_cycles(a))
    for (int r = 0; r < n; ++r) {
      Numbering p(n);
      for (int k = 0; k < n; ++k) p[k] = cycle[(r + k) % n];
      out.push_back(std::move(p));
    }
  return out;
}

struct DmConditions {
  ConditionResult a2, chord, power;
};

DmConditions dm_conditions(const Matrix& a, const MaxPlus& lambda, int g, const Numbering& p) {
  const int n = static_cast<int>(a.rows());
  const Decomposition d = decompose(a, g, p);
  const CsrTriple csr1 = build_csr(d.A1);
  DmConditions c;
  c.a2 = check_dominated(d.A2, csr_at(csr1, 1));

  c.chord.holds = true;
  c.chord.vacuous = true;
  for (int i = g; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (!in_b1_pattern(i, j, g)) continue;
      c.chord.vacuous = false;
      const MaxPlus lhs = otimes(scalar_power(lambda, j - i - 1), d.B1(i, j));
      const MaxPlus rhs = mat_power(d.A1, j - i)(i, j);
      if (!strictly_below(lhs, rhs) && c.chord.holds) {
        c.chord.holds = false;
        c.chord.detail = "chord " + pair_label(i, j) + ": " + to_string(lhs) + " not below path weight " + to_string(rhs);
      }
    }

  const int dm = dm_bound(g, n);
  const MaxPlus lhs = mat_power(d.B1, dm - 1)(g, n - 1);
  const MaxPlus rhs = csr_at(csr1, dm - 1)(g, n - 1);
  c.power.holds = strictly_below(lhs, rhs);
  c.power.vacuous = n < 2 * g;
  if (!c.power.holds)
    c.power.detail = "entry " + pair_label(g, n - 1) + " of B1^" + std::to_string(dm - 1) + ": " + to_string(lhs) +
                     " not below " + to_string(rhs);
  return c;
}

}  // namespace

std::vector<std::vector<int>> max_weight_hamiltonian_cycles(const Matrix& a, int limit) {
  detail::require_square(a);
  const int n = static_cast<int>(a.rows());
  if (n > limit)
    throw std::length_error("Hamiltonian cycle search: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit) + "; supply a numbering");
  std::vector<std::vector<int>> best_cycles;
  MaxPlus best;
  std::vector<int> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;

  auto dfs = [&](auto&& self, const Rational& weight) -> void {
    const int u = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (a(u, 0).is_bottom()) return;
      const MaxPlus total(Rational(weight + a(u, 0).value()));
      if (total > best) {
        best = total;
        best_cycles.clear();
      }
      if (total == best) best_cycles.push_back(path);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || a(u, v).is_bottom()) continue;
      used[v] = true;
      path.push_back(v);
      self(self, Rational(weight + a(u, v).value()));
      path.pop_back();
      used[v] = false;
    }
  };
  dfs(dfs, Rational(0));
  return best_cycles;
}

DmVerdict verify_dm(const Matrix& a, const std::optional<Numbering>& numbering) {
  detail::require_square(a);
  DmVerdict v;
  v.n = static_cast<int>(a.rows());
  const Spectrum s = spectrum(a);
  if (!s.crit) throw std::domain_error("verify_dm: digraph is acyclic, no critical graph");
  const CritGraph& crit = *s.crit;
  v.g = crit.girth;
  if (v.g == 1) throw std::domain_error("verify_dm: maximal critical girth is 1, which this characterization does not cover");

  v.crit_strongly_connected = crit.strongly_connected();
  const WeightedDigraph crit_digraph = associated_digraph(a).restricted_to(crit.arcs);
  v.unique_girth_cycle = cycles_of_length(crit_digraph, v.g).size() == 1;
  v.coprime.holds = std::gcd(v.g, v.n) == 1;
  if (!v.coprime.holds) v.coprime.detail = "gcd(" + std::to_string(v.g) + "," + std::to_string(v.n) + ") > 1";

  std::vector<Numbering> candidates;
  if (numbering) {
    validate_numbering(*numbering, v.n);
    candidates.push_back(*numbering);
  } else {
    for (auto& p : rotations_of_max_hamiltonians(a))
      if (leading_cycle_critical(crit, p, v.g)) candidates.push_back(std::move(p));
  }
  v.candidates = static_cast<int>(candidates.size());
  if (candidates.empty()) {
    v.diagnostic = "no maximum-weight Hamiltonian cycle starts with a critical cycle of length " + std::to_string(v.g);
    return v;
  }

  for (const auto& p : candidates) {
    const DmConditions c = dm_conditions(a, s.lambda, v.g, p);
    v.numbering = p;
    v.leading_cycle_critical = leading_cycle_critical(crit, p, v.g);
    v.a2_dominated = c.a2;
    v.chord_inequality = c.chord;
    v.power_inequality = c.power;
    v.holds = v.crit_strongly_connected && v.unique_girth_cycle && v.leading_cycle_critical && v.coprime.holds &&
              c.a2.holds && c.chord.holds && c.power.holds;
    if (v.holds) break;
  }
  if (!v.holds) {
    if (!v.crit_strongly_connected)
      v.diagnostic = "critical graph is not strongly connected";
    else if (!v.unique_girth_cycle)
      v.diagnostic = "critical cycle of length g is not unique";
    else if (!v.leading_cycle_critical)
      v.diagnostic = "cycle 1..g1 is not critical under the numbering";
    else
      v.diagnostic = "a numbered condition fails";
  }
  return v;
}

namespace {

// Wielandt pattern (A1 at g = n-1) and the remainder outside it.
std::pair<Matrix, Matrix> wielandt_split(const Matrix& renumbered) {
  const int n = static_cast<int>(renumbered.rows());
  Matrix a1 = zero_matrix(n), a2 = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) (in_a1_pattern(i, j, n - 1, n) ? a1 : a2)(i, j) = renumbered(i, j);
  return {a1, a2};
}

std::vector<Numbering> candidate_numberings(const Matrix& a, const std::optional<Numbering>& numbering) {
  if (numbering) {
    validate_numbering(*numbering, static_cast<int>(a.rows()));
    return {*numbering};
  }
  return rotations_of_max_hamiltonians(a);
}

}  // namespace

WielandtVerdict verify_wielandt(const Matrix& a, const std::optional<Numbering>& numbering) {
  detail::require_square(a);
  WielandtVerdict v;
  v.n = static_cast<int>(a.rows());
  if (v.n < 2) throw std::invalid_argument("verify_wielandt: need n >= 2");
  const Spectrum s = spectrum(a);
  if (!s.crit) {
    v.diagnostic = "digraph is acyclic";
    return v;
  }
  v.g = s.crit->girth;
  if (v.g < v.n - 1) {
    v.diagnostic = "maximal critical girth " + std::to_string(v.g) + " <= n-2: the Wielandt bound is unattainable";
    return v;
  }
  v.which = v.g == v.n ? WielandtCase::kGirthN : WielandtCase::kGirthNMinusOne;

  const auto candidates = candidate_numberings(a, numbering);
  v.candidates = static_cast<int>(candidates.size());
  if (candidates.empty()) {
    v.diagnostic = "no Hamiltonian cycle";
    return v;
  }
  for (const auto& p : candidates) {
    v.numbering = p;
    v.leading_cycle_critical = leading_cycle_critical(*s.crit, p, v.g);
    if (!v.leading_cycle_critical) {
      v.a2_dominated = {};
      continue;
    }
    const auto [a1, a2] = wielandt_split(renumber(a, p));
    v.a2_dominated = check_dominated(a2, csr_matrix(a1));
    v.holds = v.a2_dominated.holds;
    if (v.holds) break;
  }
  if (!v.holds)
    v.diagnostic = v.leading_cycle_critical ? "A2 is not strictly below CSR[A1]"
                                            : "no numbering makes the leading cycle critical";
  return v;
}

CritRcVerdict verify_crit_rc_dm(const Matrix& a) {
  detail::require_square(a);
  const Spectrum s = spectrum(a);
  if (!s.crit) throw std::domain_error("verify_crit_rc_dm: digraph is acyclic");
  CritRcVerdict v;
  const int n = static_cast<int>(a.rows());
  v.bound = dm_bound(s.crit->girth, n);
  v.crit_rc_transient = crit_row_col_transient(a).value;
  try {
    v.index = crit_graph_index(*s.crit);
  } catch (const std::runtime_error& e) {
    v.diagnostic = e.what();
  }
  v.holds = v.index && *v.index == v.bound;
  v.consistent = v.holds == (v.crit_rc_transient == v.bound);
  if (!v.holds && v.diagnostic.empty())
    v.diagnostic = "critical graph index " + (v.index ? std::to_string(*v.index) : "?") + " differs from DM(g,n) = " +
                   std::to_string(v.bound);
  return v;
}

CritRcVerdict verify_crit_rc_wielandt(const Matrix& a, const std::optional<Numbering>& numbering) {
  detail::require_square(a);
  const int n = static_cast<int>(a.rows());
  if (n < 2) throw std::invalid_argument("verify_crit_rc_wielandt: need n >= 2");
  const Spectrum s = spectrum(a);
  if (!s.crit) throw std::domain_error("verify_crit_rc_wielandt: digraph is acyclic");
  CritRcVerdict v;
  v.bound = wielandt_bound(n);
  v.crit_rc_transient = crit_row_col_transient(a).value;

  for (const auto& p : candidate_numberings(a, numbering)) {
    const auto [a1, a2] = wielandt_split(renumber(a, p));
    ArcSet pattern;
    bool complete = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (in_a1_pattern(i, j, n - 1, n)) {
          pattern.emplace(i, j);
          complete = complete && a1(i, j).is_finite();
        }
    if (!complete) continue;
    const CritGraph crit1 = critical_graph(a1);
    bool hamiltonian_critical = true;
    for (int k = 0; k < n; ++k) hamiltonian_critical = hamiltonian_critical && crit1.contains_arc(k, (k + 1) % n);
    if (!hamiltonian_critical) continue;
    v.numbering = p;
    v.index = transient_T(boolean_matrix(n, pattern));
    if (*v.index != v.bound) continue;
    const ConditionResult dominated = check_dominated(a2, csr_matrix(a1));
    if (dominated.holds) {
      v.holds = true;
      break;
    }
    v.diagnostic = "A2 is not strictly below CSR[A1]: " + dominated.detail;
  }
  if (!v.holds && v.diagnostic.empty()) v.diagnostic = "no numbering yields a Wielandt-shaped A1 with a critical Hamiltonian cycle";
  v.consistent = v.holds == (v.crit_rc_transient == v.bound);
  return v;
}

}  // namespace maxplus
