#ifndef HELIXKIT_EXACT_SERIES_HPP
#define HELIXKIT_EXACT_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "helixkit/exact/rational.hpp"

namespace helixkit {

inline constexpr std::size_t kMaxSeriesOrder = 512;

/// Formal power series c_0 + c_1 t + ... + c_N t^N, arithmetic modulo t^{N+1}.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncatedSeries(std::size_t order, std::vector<Rational> coefficients);
  TruncatedSeries(std::size_t order, std::initializer_list<long> coefficients);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Zero-pads or truncates.
  TruncatedSeries with_order(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product; the shorter operand is zero-padded to the longer order.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Throws ZeroConstantTerm when c_0 = 0.
TruncatedSeries series_inverse(const TruncatedSeries& s);

}  // namespace helixkit

#endif  // HELIXKIT_EXACT_SERIES_HPP
