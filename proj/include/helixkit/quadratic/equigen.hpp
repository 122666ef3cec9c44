#ifndef HELIXKIT_QUADRATIC_EQUIGEN_HPP
#define HELIXKIT_QUADRATIC_EQUIGEN_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "helixkit/exact/series.hpp"
#include "helixkit/helix/helix.hpp"
#include "helixkit/quadratic/presentation.hpp"

namespace helixkit {

/// Dimension skeleton of A = S^nc(L) and B = End(L) for a helix of period 3
/// whose consecutive Hom spaces all have dimension d.
class EquigenModel {
public:
  /// Throws InvalidArgument for d < 3.
  explicit EquigenModel(long d);
  long d() const { return d_; }

private:
  long d_;
};

/// 1 - d t + d t^2 - t^3
TruncatedSeries equigen_denominator(long d, std::size_t order);

/// 1 / (1 - d t + d t^2 - t^3). Throws InvalidArgument for order < 3.
TruncatedSeries hilbert_A(const EquigenModel& model, std::size_t order);
/// (1 - t^3) / (1 - d t + d t^2 - t^3)
TruncatedSeries hilbert_B(const EquigenModel& model, std::size_t order);

struct SeriesCheck {
  bool ok = true;
  std::optional<std::size_t> first_mismatch;
  BigInt expected;  // at the mismatch
  BigInt actual;
};

/// b_0 = 1 and b_i = d_i r_0 - d_0 r_i = dim Hom(L_0, L_i) for 1 <= i <= order.
SeriesCheck cross_check_hilbert_series(const TruncatedSeries& hb, const HelixTable& table, std::size_t order);

/// Requires d = 3 or d odd >= 5 (UnsupportedD otherwise).
SeriesCheck cross_check_hilbert(const EquigenModel& model, std::size_t order);

/// H_B / (1 - t^3) == H_A coefficientwise up to `order`.
SeriesCheck normal_quotient_check_series(const TruncatedSeries& hb, const TruncatedSeries& ha, std::size_t order);
/// Throws InvalidArgument for order < 6.
SeriesCheck normal_quotient_check(const EquigenModel& model, std::size_t order);

/// Ranks (1, d, d, 1) of the Koszul resolution; equal to the dual dimensions in
/// degrees 0..3, which vanish above 3. Throws InternalInvariant if the resolution
/// ranks fail to invert H_A.
std::array<BigInt, 4> frobenius_profile(const EquigenModel& model);

/// d when the three consecutive pairings agree.
std::optional<BigInt> equigenerated_detect(const BigInt& first, const BigInt& second, const BigInt& third);

/// Period-1 dimension tables of A (from H_A) and of its dual (frobenius profile).
DimTable equigen_primal_dims(const EquigenModel& model, std::size_t max_degree);
DimTable equigen_dual_dims(const EquigenModel& model, std::size_t max_degree);

KoszulityWitness equigen_witness(const EquigenModel& model, std::size_t max_offset);

}  // namespace helixkit

#endif  // HELIXKIT_QUADRATIC_EQUIGEN_HPP
