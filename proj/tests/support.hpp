#pragma once

// Independent reference implementations used by the tests.  They work on
// plain optional rationals and brute force, sharing no algorithm with the
// library beyond the Matrix container.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace oracle {

using maxplus::Matrix;
using maxplus::MaxPlus;
using maxplus::Rational;
using Value = std::optional<Rational>;

Value raw(const MaxPlus& a);
MaxPlus wrap(const Value& v);

/// Entry (i, j) of A^t as the best weight of a walk of length t, by a
/// layered walk recursion.
Matrix power(const Matrix& a, int t);
Matrix product(const Matrix& a, const Matrix& b);

struct SimpleCycle {
  std::vector<int> nodes;
  Rational weight;
};

/// Every elementary cycle once, by depth-first search from its minimal node.
std::vector<SimpleCycle> simple_cycles(const Matrix& a);

/// Largest cycle mean by exhaustive enumeration; empty when acyclic.
Value max_cycle_mean(const Matrix& a);

/// Arcs lying on some cycle of maximal mean.
std::set<std::pair<int, int>> critical_arcs(const Matrix& a);

/// lcm over the components of the critical graph of the gcd of the critical
/// cycle lengths in that component.
int critical_cyclicity(const Matrix& a);

/// For lambda = 0: per residue r in 0..gamma-1, the best weight of a walk
/// i -> j through a critical node whose length is r mod gamma (length >= 1).
std::vector<Matrix> walk_csr(const Matrix& a, int gamma, const std::set<int>& critical_nodes);

/// T1 by its definition with powers from `power`, scanning t up to `until`.
int weak_threshold(const Matrix& a, const std::vector<Matrix>& csr_terms_1_based, const Matrix& nachtigall,
                   int until);

}  // namespace oracle

namespace testgen {

struct EntryShape {
  double density = 0.6;
  int numerator = 6;     // numerators in [-numerator, numerator]
  int denominator = 3;   // denominators in [1, denominator]
};

maxplus::Matrix random_matrix(std::mt19937_64& rng, int n, const EntryShape& shape = {});

/// A random matrix whose digraph carries at least one cycle.
maxplus::Matrix random_cyclic_matrix(std::mt19937_64& rng, int n, const EntryShape& shape = {});

maxplus::Rational random_rational(std::mt19937_64& rng, int numerator, int denominator);

}  // namespace testgen
