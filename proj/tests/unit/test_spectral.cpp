#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxplus/extremal.hpp"
#include "maxplus/spectral.hpp"
#include "support.hpp"

using namespace maxplus;

TEST_CASE("maximum cycle mean on small cases", "[spectral]") {
  CHECK(max_cycle_mean(parse_matrix("1\n3\n")) == MaxPlus(3));
  CHECK(max_cycle_mean(parse_matrix("2\n-1 0\n0 -2\n")) == MaxPlus(0));
  CHECK(max_cycle_mean(parse_matrix("2\n-inf 1\n-inf -inf\n")).is_bottom());
  CHECK_FALSE(spectrum(zero_matrix(3)).crit.has_value());
  CHECK_THROWS_AS(critical_graph(zero_matrix(2)), std::domain_error);
}

TEST_CASE("maximum cycle mean and critical arcs match enumeration", "[spectral][oracle]") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 7;
    const Matrix a = testgen::random_matrix(rng, n, {0.25 + 0.1 * (k % 6), 1 + k % 5, 1 + k % 3});
    CHECK(oracle::raw(max_cycle_mean(a)) == oracle::max_cycle_mean(a));
    const Spectrum s = spectrum(a);
    if (!s.crit) continue;
    CHECK(s.crit->arcs == oracle::critical_arcs(a));
    CHECK(s.crit->cyclicity == oracle::critical_cyclicity(a));
    for (int v : s.crit->nodes) CHECK(s.crit->contains_node(v));
  }
}

TEST_CASE("critical graph shapes", "[spectral]") {
  const CritGraph two = critical_graph(parse_matrix("3\n-1 0 -inf\n0 -2 -5\n-inf -3 -4\n"));
  CHECK(two.arcs == ArcSet{{0, 1}, {1, 0}});
  CHECK(two.girth == 2);

  for (int n = 3; n <= 6; ++n) {
    Matrix w = wielandt_skeleton(n);
    w(n - 1, 0) = MaxPlus(-1);  // the Hamiltonian cycle falls below the (n-1)-cycle
    const CritGraph c = critical_graph(w);
    CHECK(c.nodes.size() == static_cast<std::size_t>(n - 1));
    CHECK(c.girth == n - 1);
  }

  Matrix zeros(3, 3);
  zeros.setConstant(MaxPlus(0));
  CHECK(critical_graph(zeros).arcs.size() == 9);
}

TEST_CASE("critical subgraphs are validated", "[spectral]") {
  const Matrix a = parse_matrix("2\n0 0\n0 0\n");
  CHECK(critical_subgraph(a, ArcSet{{0, 0}}).nodes == std::vector<int>{0});
  CHECK_THROWS_AS(critical_subgraph(a, ArcSet{{0, 1}}), std::invalid_argument);  // not completely reducible
  CHECK_THROWS_AS(critical_subgraph(a, ArcSet{}), std::invalid_argument);
  CHECK_THROWS_AS(critical_subgraph(parse_matrix("2\n0 -1\n-1 0\n"), ArcSet{{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("visualization predicates", "[spectral]") {
  Matrix zeros(2, 2);
  zeros.setConstant(MaxPlus(0));
  CHECK(is_strictly_visualized(zeros));
  const Matrix loose = parse_matrix("2\n0 0\n-inf -1\n");  // arc (1,2) equals lambda but is not critical
  CHECK(is_visualized(loose));
  CHECK_FALSE(is_strictly_visualized(loose));
  CHECK_FALSE(is_visualized(parse_matrix("2\n-1 1\n-3 -inf\n")));
}

TEST_CASE("visualize yields a strict visualization", "[spectral][property]") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 100; ++k) {
    const Matrix a = testgen::random_cyclic_matrix(rng, 1 + k % 7, {0.2 + 0.1 * (k % 6), 4, 3});
    const Visualization v = visualize(a);
    CHECK(mat_equal(v.scaled, scale(a, v.scaling)));
    CHECK(is_visualized(v.scaled));
    CHECK(is_strictly_visualized(v.scaled));
    CHECK(mat_equal(scale(v.scaled, v.scaling.inverse()), a));
    // Strictness survives a second pass.
    CHECK(is_strictly_visualized(visualize(v.scaled).scaled));
  }
  CHECK_THROWS_AS(visualize(zero_matrix(2)), std::domain_error);
}
