#include "helixkit/exact/surd.hpp"

#include "helixkit/error.hpp"

namespace helixkit {

Surd::Surd(Rational a, Rational b, BigInt m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (m_ < 0) throw Error(Errc::RadicandMismatch, "negative radicand");
  if (is_perfect_square(m_)) {
    a_ += b_ * Rational(isqrt(m_));
    b_ = Rational(0);
  }
}

void Surd::check_radicand(const Surd& o) const {
  if (m_ != o.m_)
    throw Error(Errc::RadicandMismatch,
                "radicands differ: " + to_string(m_) + " vs " + to_string(o.m_));
}

int Surd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 m
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(m_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Surd Surd::conjugate() const { return Surd(a_, -b_, m_); }

Rational Surd::norm() const { return a_ * a_ - b_ * b_ * Rational(m_); }

Surd Surd::pow(unsigned exponent) const {
  Surd result = Surd::rational(Rational(1), m_);
  Surd base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Surd& Surd::operator+=(const Surd& o) {
  check_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  check_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  check_radicand(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * Rational(m_);
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  check_radicand(o);
  if (o.sign() == 0) throw Error(Errc::DivisionByZero, "surd division by zero");
  // radicand is never a perfect square once b != 0, so the norm is nonzero
  Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const Surd& x, const Surd& y) {
  x.check_radicand(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Ordering compare(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

std::string Surd::to_exact() const {
  if (is_rational()) return a_.to_fraction();
  std::string out;
  if (!a_.is_zero()) out = a_.to_fraction() + (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) out = "-";
  out += b_.abs().to_fraction() + "√" + to_string(m_);
  return out;
}

BigInt surd_floor(const Surd& x) {
  if (x.is_rational()) return x.a().floor();
  // |b| sqrt(m) = sqrt(p^2 m) / q
  BigInt p = x.b().num();
  BigInt q = x.b().den();
  BigInt t = isqrt(p * p * x.m());
  Rational approx = x.b().sign() > 0 ? x.a() + Rational(t, q) : x.a() - Rational(t, q);
  BigInt k = approx.floor();
  auto at = [&](const BigInt& v) { return Surd::rational(Rational(v), x.m()); };
  while (compare(x, at(k)) == Ordering::Less) k -= 1;
  while (compare(x, at(k + 1)) != Ordering::Less) k += 1;
  return k;
}

std::string surd_to_decimal(const Surd& x, unsigned digits) {
  if (digits > 50) throw Error(Errc::InvalidArgument, "surd_to_decimal supports at most 50 digits");
  BigInt scale = pow10(digits);
  Surd scaled = x * Rational(scale);
  bool negative = scaled.sign() < 0;
  if (negative) scaled = -scaled;
  BigInt n = surd_floor(scaled + Rational(1, 2));
  if (n == 0) negative = false;

  BigInt whole = n / scale;
  BigInt frac = n % scale;
  std::string out = negative ? "-" : "";
  out += to_string(whole);
  if (digits > 0) {
    std::string f = to_string(frac);
    out += '.';
    out += std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace helixkit
