#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxplus {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Element of the max-plus semiring over the rationals.
///
/// Holds either an exact rational or the semiring zero (-inf).  A default
/// constructed value is -inf, which makes zero-filled containers behave like
/// max-plus zero matrices.  Rationals are canonicalized on construction, so
/// structural and semantic equality coincide.
class MaxPlus {
 public:
  MaxPlus() = default;
  MaxPlus(Rational value);  // NOLINT: implicit by intent, a rational is a semiring element
  MaxPlus(long value) : MaxPlus(Rational(value)) {}  // NOLINT
  MaxPlus(int value) : MaxPlus(Rational(value)) {}   // NOLINT
  MaxPlus(long num, long den);

  static MaxPlus bottom() { return {}; }
  static MaxPlus unit() { return MaxPlus(0L); }

  bool is_bottom() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// The rational value; throws std::domain_error on -inf.
  const Rational& value() const;

  friend bool operator==(const MaxPlus& a, const MaxPlus& b);
  friend std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b);

 private:
  std::optional<Rational> value_;
};

inline MaxPlus oplus(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }
MaxPlus otimes(const MaxPlus& a, const MaxPlus& b);

/// t-fold otimes power, i.e. t * a.  t = 0 yields the unit even for -inf.
MaxPlus scalar_power(const MaxPlus& a, std::int64_t t);

/// Multiplicative inverse -a; throws std::domain_error on -inf.
MaxPlus negate(const MaxPlus& a);

/// Strict order used by the matrix domination relation: a < b, or both -inf.
inline bool strictly_below(const MaxPlus& a, const MaxPlus& b) {
  return a < b || (a.is_bottom() && b.is_bottom());
}

/// "p/q", "p" when q = 1, "-inf" for the semiring zero.
std::string to_string(const MaxPlus& a);
std::string to_string(const Rational& r);

/// Inverse of to_string.  Also accepts "*" for -inf.  Throws
/// std::invalid_argument on malformed tokens or a zero denominator.
MaxPlus parse_scalar(std::string_view token);

std::ostream& operator<<(std::ostream& os, const MaxPlus& a);

}  // namespace maxplus
