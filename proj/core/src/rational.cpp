#include "liouville/rational.hpp"

#include "liouville/errors.hpp"

#include <cctype>
#include <utility>

namespace liouville {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ArgumentError("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw ArgumentError("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw ArgumentError("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };

  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer(num)) throw ArgumentError("Rational: malformed literal '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num), mpz_class(1));
  const auto den = text.substr(slash + 1);
  if (!is_integer(den)) throw ArgumentError("Rational: malformed literal '" + std::string(text) + "'");
  return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArgumentError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace liouville
