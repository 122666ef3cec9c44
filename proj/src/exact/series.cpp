#include "helixkit/exact/series.hpp"

#include <algorithm>
#include <string>

#include "helixkit/error.hpp"

namespace helixkit {

namespace {

void check_order(std::size_t order) {
  if (order > kMaxSeriesOrder)
    throw Error(Errc::OrderTooLarge,
                "series order " + std::to_string(order) + " exceeds " + std::to_string(kMaxSeriesOrder));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) {
  check_order(order);
  coeffs_.assign(order + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coefficients)
    : TruncatedSeries(order) {
  std::size_t n = std::min(coefficients.size(), coeffs_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long> coefficients)
    : TruncatedSeries(order) {
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i > order) break;
    coeffs_[i++] = Rational(c);
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
  return TruncatedSeries(order, coeffs_);
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  std::size_t order = std::max(s.order(), t.order());
  TruncatedSeries a = s.with_order(order);
  TruncatedSeries b = t.with_order(order);
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s[0].is_zero()) throw Error(Errc::ZeroConstantTerm, "series has zero constant term");
  std::size_t order = s.order();
  Rational inv0 = s[0].inverse();
  TruncatedSeries out(order);
  out[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      if (!s[k].is_zero()) acc += s[k] * out[n - k];
    out[n] = -(acc * inv0);
  }
  return out;
}

}  // namespace helixkit
