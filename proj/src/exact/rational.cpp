#include "helixkit/exact/rational.hpp"

#include <cctype>
#include <ostream>

#include "helixkit/error.hpp"

namespace helixkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::RadicandMismatch: return "RadicandMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ColumnMismatch: return "ColumnMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidChern: return "InvalidChern";
    case Errc::NotSimple: return "NotSimple";
    case Errc::SlopeOrderViolation: return "SlopeOrderViolation";
    case Errc::NotMutable: return "NotMutable";
    case Errc::InvalidTriad: return "InvalidTriad";
    case Errc::InvalidSeed: return "InvalidSeed";
    case Errc::TableTooShort: return "TableTooShort";
    case Errc::UnsupportedD: return "UnsupportedD";
    case Errc::NotEquigeneratedSeed: return "NotEquigeneratedSeed";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::DimensionCapExceeded: return "DimensionCapExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text))
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  auto num_part = text.substr(0, slash);
  auto den_part = text.substr(slash + 1);
  if (!den_part.empty() && (den_part[0] == '-' || den_part[0] == '+'))
    throw Error(Errc::ParseError, "sign in denominator: '" + std::string(text) + "'");
  BigInt den = parse_bigint(den_part);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator: '" + std::string(text) + "'");
  return Rational(parse_bigint(num_part), den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_fraction() const {
  return to_string(num()) + "/" + to_string(den());
}

std::string Rational::to_short() const {
  return is_integer() ? to_string(num()) : to_fraction();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_fraction(); }

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::InternalInvariant, "isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt pow10(unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

}  // namespace helixkit
