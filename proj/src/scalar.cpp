#include "maxplus/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace maxplus {

MaxPlus::MaxPlus(Rational value) : value_(std::move(value)) { value_->canonicalize(); }

MaxPlus::MaxPlus(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = Rational(num, den);
  value_->canonicalize();
}

const Rational& MaxPlus::value() const {
  if (!value_) throw std::domain_error("-inf has no rational value");
  return *value_;
}

bool operator==(const MaxPlus& a, const MaxPlus& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() && b.is_bottom();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) {
  if (a.is_bottom()) return b.is_bottom() ? std::strong_ordering::equal : std::strong_ordering::less;
  if (b.is_bottom()) return std::strong_ordering::greater;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

MaxPlus otimes(const MaxPlus& a, const MaxPlus& b) {
  if (a.is_bottom() || b.is_bottom()) return {};
  return MaxPlus(Rational(a.value() + b.value()));
}

MaxPlus scalar_power(const MaxPlus& a, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("scalar_power: negative exponent");
  if (t == 0) return MaxPlus::unit();
  if (a.is_bottom()) return {};
  mpz_class factor;
  factor = static_cast<long>(t);
  return MaxPlus(Rational(a.value() * factor));
}

MaxPlus negate(const MaxPlus& a) { return MaxPlus(Rational(-a.value())); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const MaxPlus& a) { return a.is_bottom() ? "-inf" : to_string(a.value()); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

MaxPlus parse_scalar(std::string_view token) {
  if (token == "-inf" || token == "*") return {};
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : token.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed scalar token '" + std::string(token) + "'");
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return MaxPlus(Rational(p, q));
}

std::ostream& operator<<(std::ostream& os, const MaxPlus& a) { return os << to_string(a); }

}  // namespace maxplus
