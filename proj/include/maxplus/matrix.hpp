#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "maxplus/scalar.hpp"

namespace Eigen {

// Storage-only traits: the semiring operations are the free functions in
// namespace maxplus, never Eigen's operator+ / operator*.
template <>
struct NumTraits<maxplus::MaxPlus> {
  using Real = maxplus::MaxPlus;
  using NonInteger = maxplus::MaxPlus;
  using Nested = maxplus::MaxPlus;
  using Literal = maxplus::MaxPlus;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 8
  };
};

}  // namespace Eigen

namespace maxplus {

/// Dense max-plus matrix.  Default-constructed entries are -inf.
using Matrix = Eigen::Matrix<MaxPlus, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Matrix zero_matrix(Eigen::Index n);
Matrix identity_matrix(Eigen::Index n);

namespace detail {

template <typename DA, typename DB>
void require_same_shape(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

void require_square(const Matrix& a);

}  // namespace detail

/// (A B)_ij = max_k a_ik + b_kj.
template <typename DA, typename DB>
Matrix mat_mul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch in mat_mul: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  Matrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const MaxPlus& aik = a(i, k);
      if (aik.is_bottom()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const MaxPlus& bkj = b(k, j);
        if (bkj.is_bottom()) continue;
        Rational w = aik.value() + bkj.value();
        if (out(i, j).is_bottom() || out(i, j).value() < w) out(i, j) = MaxPlus(std::move(w));
      }
    }
  }
  return out;
}

template <typename DA, typename DB>
Matrix mat_oplus(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

/// Exact entrywise equality.
template <typename DA, typename DB>
bool mat_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// A < B: a_ij <= b_ij everywhere, with equality allowed only at -inf.
template <typename DA, typename DB>
bool strictly_dominated_by(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!strictly_below(a(i, j), b(i, j))) return false;
  return true;
}

/// alpha (x) A.
Matrix scalar_times(const MaxPlus& alpha, const Matrix& a);

/// A^t by binary exponentiation, t >= 1.
Matrix mat_power(const Matrix& a, std::int64_t t);

inline Matrix transpose(const Matrix& a) { return a.transpose(); }

/// A* = I (+) A (+) ... (+) A^{n-1} via a Floyd-Warshall closure.  Throws
/// std::domain_error when the digraph carries a cycle of positive weight.
Matrix kleene_star(const Matrix& a);

/// Invertible diagonal scaling D = diag(d_1, ..., d_n) with finite d_i.
class DiagonalScaling {
 public:
  explicit DiagonalScaling(std::vector<Rational> d) : d_(std::move(d)) {}
  static DiagonalScaling identity(std::size_t n) { return DiagonalScaling(std::vector<Rational>(n, Rational(0))); }

  std::size_t size() const { return d_.size(); }
  const Rational& operator[](std::size_t i) const { return d_[i]; }
  const std::vector<Rational>& entries() const { return d_; }
  DiagonalScaling inverse() const;

 private:
  std::vector<Rational> d_;
};

/// D^{-1} A D, i.e. entry (i, j) becomes -d_i + a_ij + d_j.
Matrix scale(const Matrix& a, const DiagonalScaling& d);

/// Text form: first line n, then n lines of n tokens.
void write_matrix(std::ostream& os, const Matrix& a);
std::string to_text(const Matrix& a);

/// Parses the text form; throws std::invalid_argument with a line-oriented
/// message on malformed input.
Matrix read_matrix(std::istream& is);
Matrix parse_matrix(const std::string& text);
Matrix load_matrix(const std::string& path);

}  // namespace maxplus
