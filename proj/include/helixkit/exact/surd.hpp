#ifndef HELIXKIT_EXACT_SURD_HPP
#define HELIXKIT_EXACT_SURD_HPP

#include <compare>
#include <string>

#include "helixkit/exact/rational.hpp"

namespace helixkit {

/// Element a + b*sqrt(m) of Q(sqrt m). The radicand need not be squarefree;
/// a perfect-square radicand is folded into the rational part on construction.
class Surd {
public:
  Surd() = default;
  Surd(Rational a, Rational b, BigInt m);

  static Surd rational(Rational a, BigInt m) { return Surd(std::move(a), Rational(0), std::move(m)); }
  static Surd root(BigInt m) { return Surd(Rational(0), Rational(1), std::move(m)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& m() const { return m_; }

  bool is_rational() const { return b_.is_zero(); }
  int sign() const;

  Surd conjugate() const;
  /// a^2 - b^2 m, the field norm down to Q.
  Rational norm() const;
  Surd pow(unsigned exponent) const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  Surd operator-() const { return Surd(-a_, -b_, m_); }

  /// Same radicand required; throws RadicandMismatch otherwise.
  friend bool operator==(const Surd& x, const Surd& y);
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  /// Rational parts for arithmetic against a plain rational (same field).
  Surd& operator+=(const Rational& r) { a_ += r; return *this; }
  Surd& operator*=(const Rational& r) { a_ *= r; b_ *= r; return *this; }
  friend Surd operator+(Surd x, const Rational& r) { return x += r; }
  friend Surd operator-(Surd x, const Rational& r) { return x += -r; }
  friend Surd operator-(const Rational& r, const Surd& x) { return -x + r; }
  friend Surd operator*(Surd x, const Rational& r) { return x *= r; }
  friend Surd operator*(const Rational& r, Surd x) { return x *= r; }

  /// "a + b√m" with a, b as p/q strings; "a" alone when rational.
  std::string to_exact() const;

private:
  void check_radicand(const Surd& o) const;

  Rational a_;
  Rational b_;
  BigInt m_;
};

enum class Ordering { Less, Equal, Greater };
Ordering compare(const Surd& x, const Surd& y);

/// Correctly rounded decimal with `digits` places after the point (digits <= 50).
/// Display only; computed from exact integer square roots and exact comparisons.
std::string surd_to_decimal(const Surd& x, unsigned digits);

/// Exact floor(x).
BigInt surd_floor(const Surd& x);

}  // namespace helixkit

#endif  // HELIXKIT_EXACT_SURD_HPP
