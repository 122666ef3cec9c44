#include "helixkit/quadratic/equigen.hpp"

#include <string>

#include "helixkit/error.hpp"

namespace helixkit {

EquigenModel::EquigenModel(long d) : d_(d) {
  if (d < 3) throw Error(Errc::InvalidArgument, "equigenerated model needs d >= 3, got " + std::to_string(d));
}

TruncatedSeries equigen_denominator(long d, std::size_t order) {
  return TruncatedSeries(order, {1, -d, d, -1});
}

TruncatedSeries hilbert_A(const EquigenModel& model, std::size_t order) {
  if (order < 3) throw Error(Errc::InvalidArgument, "Hilbert series order must be at least 3");
  return series_inverse(equigen_denominator(model.d(), order));
}

TruncatedSeries hilbert_B(const EquigenModel& model, std::size_t order) {
  return series_mul(TruncatedSeries(order, {1, 0, 0, -1}), hilbert_A(model, order));
}

namespace {

SeriesCheck mismatch(std::size_t i, const Rational& expected, const Rational& actual) {
  SeriesCheck c;
  c.ok = false;
  c.first_mismatch = i;
  c.expected = expected.floor();
  c.actual = actual.floor();
  return c;
}

}  // namespace

SeriesCheck cross_check_hilbert_series(const TruncatedSeries& hb, const HelixTable& table, std::size_t order) {
  if (hb.order() < order || table.rows.size() <= order)
    throw Error(Errc::InvalidArgument, "series or table shorter than the requested order");
  if (hb[0] != Rational(1)) return mismatch(0, Rational(1), hb[0]);
  const HelixRow& base = table.rows[0];
  for (std::size_t i = 1; i <= order; ++i) {
    const HelixRow& row = table.rows[i];
    Rational pairing(BigInt(row.d * base.r - base.d * row.r));
    if (hb[i] != pairing) return mismatch(i, pairing, hb[i]);
  }
  return {};
}

SeriesCheck cross_check_hilbert(const EquigenModel& model, std::size_t order) {
  if (model.d() != 3) require_family_d(model.d());
  HelixTable table = invariants_from_seed(Seed::equigenerated(model.d()), std::max<std::size_t>(order, 1));
  if (table.degenerate())
    throw Error(Errc::InternalInvariant, "seed table degenerated before the requested order");
  return cross_check_hilbert_series(hilbert_B(model, std::max<std::size_t>(order, 3)), table, order);
}

SeriesCheck normal_quotient_check_series(const TruncatedSeries& hb, const TruncatedSeries& ha, std::size_t order) {
  if (hb.order() < order || ha.order() < order)
    throw Error(Errc::InvalidArgument, "series shorter than the requested order");
  TruncatedSeries quotient = series_mul(hb.with_order(order), series_inverse(TruncatedSeries(order, {1, 0, 0, -1})));
  for (std::size_t i = 0; i <= order; ++i)
    if (quotient[i] != ha[i]) return mismatch(i, ha[i], quotient[i]);
  return {};
}

SeriesCheck normal_quotient_check(const EquigenModel& model, std::size_t order) {
  if (order < 6) throw Error(Errc::InvalidArgument, "normal quotient check needs order >= 6");
  return normal_quotient_check_series(hilbert_B(model, order), hilbert_A(model, order), order);
}

std::array<BigInt, 4> frobenius_profile(const EquigenModel& model) {
  const BigInt d(model.d());
  std::array<BigInt, 4> profile{BigInt(1), d, d, BigInt(1)};
  // alternating resolution ranks times H_A must give the simple module
  constexpr std::size_t kOrder = 12;
  TruncatedSeries signed_ranks(kOrder);
  for (std::size_t l = 0; l < profile.size(); ++l)
    signed_ranks[l] = l % 2 ? -Rational(profile[l]) : Rational(profile[l]);
  if (series_mul(signed_ranks, hilbert_A(model, kOrder)) != TruncatedSeries::one(kOrder))
    throw Error(Errc::InternalInvariant, "Koszul resolution ranks do not match the Hilbert series");
  return profile;
}

std::optional<BigInt> equigenerated_detect(const BigInt& first, const BigInt& second, const BigInt& third) {
  if (first == second && second == third) return first;
  return std::nullopt;
}

DimTable equigen_primal_dims(const EquigenModel& model, std::size_t max_degree) {
  TruncatedSeries ha = hilbert_A(model, std::max<std::size_t>(max_degree, 3));
  DimTable t{1, max_degree, {std::vector<BigInt>(max_degree + 1)}};
  for (std::size_t n = 0; n <= max_degree; ++n) t.dims[0][n] = ha[n].num();
  return t;
}

DimTable equigen_dual_dims(const EquigenModel& model, std::size_t max_degree) {
  auto profile = frobenius_profile(model);
  DimTable t{1, max_degree, {std::vector<BigInt>(max_degree + 1, BigInt(0))}};
  for (std::size_t n = 0; n <= max_degree && n < profile.size(); ++n) t.dims[0][n] = profile[n];
  return t;
}

KoszulityWitness equigen_witness(const EquigenModel& model, std::size_t max_offset) {
  return witness_from_dims(equigen_primal_dims(model, max_offset), equigen_dual_dims(model, max_offset), max_offset);
}

}  // namespace helixkit
