#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"
#include "maxplus/bounds.hpp"
#include "maxplus/csr.hpp"
#include "maxplus/extremal.hpp"

namespace maxplus {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // A positive rational k/d with small numerator and denominator.
  Rational margin() { return fraction(uniform(1, 4), uniform(1, 4)); }
  Rational offset(int bound) { return fraction(uniform(-bound, bound), uniform(1, 4)); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  Numbering permutation(int n) {
    Numbering p = identity_numbering(n);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  static Rational fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

MaxPlus minus(const MaxPlus& a, const Rational& m) { return MaxPlus(Rational(a.value() - m)); }

// Populates every entry outside `occupied` where bound is finite with
// bound - margin, each with probability p.
void fill_below(Matrix& out, const Matrix& bound, const std::vector<std::vector<bool>>& occupied, double p,
                Sampler& s) {
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      if (!occupied[i][j] && bound(i, j).is_finite() && s.coin(p)) out(i, j) = minus(bound(i, j), s.margin());
}

// Random diagonal scaling and scalar shift, then a random relabelling.  The
// returned numbering maps labels back to the canonical matrix.
std::pair<Matrix, Numbering> disguise(const Matrix& canonical, Sampler& s, bool randomize) {
  const int n = static_cast<int>(canonical.rows());
  if (!randomize) return {canonical, identity_numbering(n)};
  std::vector<Rational> d(n);
  for (auto& x : d) x = s.offset(6);
  const Matrix scaled = scalar_times(MaxPlus(s.offset(5)), scale(canonical, DiagonalScaling(d)));
  const Numbering q = s.permutation(n);
  Matrix out = zero_matrix(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out(q[k], q[l]) = scaled(k, l);
  return {out, q};
}

Matrix dm_skeleton(int n, int g, bool critical_hamiltonian, Sampler& s) {
  Matrix a1 = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_a1_pattern(i, j, g, n)) {
        const bool on_g_cycle = (j == i + 1 && i < g - 1) || (i == g - 1 && j == 0);
        a1(i, j) = (critical_hamiltonian || on_g_cycle) ? MaxPlus::unit() : MaxPlus(Rational(-s.margin()));
      }
  return a1;
}

Matrix dm_candidate(int n, int g, const GeneratorOptions& opt, double fill, Sampler& s) {
  const Matrix a1 = dm_skeleton(n, g, opt.critical_hamiltonian, s);
  Matrix a = a1;
  std::vector<std::vector<bool>> occupied(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) occupied[i][j] = in_a1_pattern(i, j, g, n) || in_b1_pattern(i, j, g);

  // B1 entries off the path: forward chords below the path they skip, back
  // arcs closing a cycle of negative weight.
  for (int i = g; i < n; ++i)
    for (int j = g; j < n; ++j) {
      if (!in_b1_pattern(i, j, g) || j == i + 1 || !s.coin(fill)) continue;
      if (j > i) {
        a(i, j) = minus(mat_power(a1, j - i)(i, j), s.margin());
      } else {
        a(i, j) = MaxPlus(Rational(-mat_power(a1, i - j)(j, i).value() - s.margin()));
      }
    }
  fill_below(a, csr_matrix(a1), occupied, fill, s);
  return a;
}

}  // namespace

GeneratedInstance generate_dm(int n, int g, std::uint64_t seed, const GeneratorOptions& opt) {
  if (g < 2 || g >= n) throw std::invalid_argument("generate_dm: need 2 <= g < n");
  if (std::gcd(g, n) != 1) throw std::invalid_argument("generate_dm: g and n must be coprime");
  Sampler s(seed);
  const int target = dm_bound(g, n);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    // The final attempt uses the bare skeleton, which always qualifies.
    const double fill = attempt + 1 == opt.max_attempts ? 0.0 : opt.fill_probability;
    const auto [a, numbering] = disguise(dm_candidate(n, g, opt, fill, s), s, opt.randomize);
    const int t1 = weak_threshold_T1(a).T1;
    if (t1 != target || !verify_dm(a, numbering).holds) continue;
    GeneratedInstance out;
    out.matrix = a;
    out.family = "dm";
    out.n = n;
    out.g = g;
    out.seed = seed;
    out.numbering = numbering;
    out.verified_T1 = t1;
    return out;
  }
  throw GenerationError("generate_dm: no verified instance within " + std::to_string(opt.max_attempts) + " attempts");
}

Matrix wielandt_skeleton(int n) {
  if (n < 2) throw std::invalid_argument("wielandt_skeleton: need n >= 2");
  Matrix a = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_a1_pattern(i, j, n - 1, n)) a(i, j) = MaxPlus::unit();
  return a;
}

GeneratedInstance generate_wielandt(int n, std::uint64_t seed, WielandtCase which, const GeneratorOptions& opt) {
  Sampler s(seed);
  const int target = wielandt_bound(n);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const double fill = attempt + 1 == opt.max_attempts ? 0.0 : opt.fill_probability;
    Matrix a1 = wielandt_skeleton(n);
    if (which == WielandtCase::kGirthN) a1(n - 2, 0) = MaxPlus(Rational(-s.margin()));
    Matrix canonical = a1;
    if (n == 2 && which == WielandtCase::kGirthNMinusOne) {
      canonical(1, 1) = MaxPlus(Rational(-s.margin()));  // a11 != a22 selects one loop
    } else {
      std::vector<std::vector<bool>> occupied(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) occupied[i][j] = in_a1_pattern(i, j, n - 1, n);
      fill_below(canonical, csr_matrix(a1), occupied, fill, s);
    }
    const auto [a, numbering] = disguise(canonical, s, opt.randomize);
    const int t1 = weak_threshold_T1(a).T1;
    if (t1 != target || !verify_wielandt(a, numbering).holds) continue;
    GeneratedInstance out;
    out.matrix = a;
    out.family = "wielandt";
    out.n = n;
    out.g = which == WielandtCase::kGirthN ? n : n - 1;
    out.seed = seed;
    out.wielandt_case = to_string(which);
    out.numbering = numbering;
    out.verified_T1 = t1;
    return out;
  }
  throw GenerationError("generate_wielandt: no verified instance within " + std::to_string(opt.max_attempts) +
                        " attempts");
}

std::string provenance_json(const GeneratedInstance& g, int indent) {
  nlohmann::ordered_json j;
  j["family"] = g.family;
  j["n"] = g.n;
  j["g"] = g.g;
  j["seed"] = g.seed;
  if (!g.wielandt_case.empty()) j["case"] = g.wielandt_case;
  j["numbering"] = format_numbering(g.numbering);
  j["verified_T1"] = g.verified_T1;
  return j.dump(indent);
}

}  // namespace maxplus
