#ifndef HELIXKIT_HELIX_HELIX_HPP
#define HELIXKIT_HELIX_HELIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "helixkit/bundles/chern.hpp"
#include "helixkit/exact/rational.hpp"
#include "helixkit/exact/surd.hpp"

namespace helixkit {

inline constexpr std::size_t kDefaultHorizon = 50;

/// Strictly increasing slopes (mu_0, mu'_1, mu_1).
class Seed {
public:
  /// Throws InvalidSeed unless mu0 < mu1p < mu1.
  Seed(Rational mu0, Rational mu1p, Rational mu1);
  /// The (0, d/2, d) family.
  static Seed equigenerated(long d);

  const Rational& mu0() const { return mu0_; }
  const Rational& mu1p() const { return mu1p_; }
  const Rational& mu1() const { return mu1_; }

  /// d when the seed is (0, d/2, d) with d odd and d >= 3
  std::optional<long> family_d() const;

  /// ((r_0,d_0), (r'_1,d'_1), (r_1,d_1))
  Triad triad() const;

  friend bool operator==(const Seed&, const Seed&) = default;

private:
  Rational mu0_;
  Rational mu1p_;
  Rational mu1_;
};

struct HelixRow {
  std::size_t n = 0;
  BigInt d;
  BigInt r;
  std::optional<BigInt> dp;  // absent at n = 0
  std::optional<BigInt> rp;

  std::optional<Rational> slope() const;
  friend bool operator==(const HelixRow&, const HelixRow&) = default;
};

struct HelixTable {
  Seed seed;
  std::optional<long> d_param;
  std::vector<HelixRow> rows;
  /// first n with r_n <= 0 or r'_n <= 0; generation stops after that row
  std::optional<std::size_t> degenerate_at;

  bool degenerate() const { return degenerate_at.has_value(); }
  ChernVector bundle(std::size_t n) const;        // L_n as (r_n, d_n)
  ChernVector primed_bundle(std::size_t n) const;  // L'_n, n >= 1
};

/// Rows 0..N of the recursion; halts after the first row with a non-positive rank.
/// Throws InvalidChern if N < 1.
HelixTable invariants_from_seed(const Seed& seed, std::size_t horizon);

/// 2x2 determinant | x1 y1 ; x2 y2 | of columns (x1, x2), (y1, y2).
inline BigInt det2(const BigInt& top_left, const BigInt& top_right, const BigInt& bottom_left,
                   const BigInt& bottom_right) {
  return top_left * bottom_right - top_right * bottom_left;
}

enum class RankComponent { R, RPrime };

struct PositivityReport {
  enum class Verdict { Certified, VerifiedToHorizon, FailsAt };
  Verdict verdict = Verdict::VerifiedToHorizon;
  std::size_t horizon = 0;
  std::size_t fail_n = 0;                    // FailsAt only
  RankComponent fail_component = RankComponent::R;

  std::string describe() const;
};

PositivityReport check_positivity(const Seed& seed, std::size_t horizon = kDefaultHorizon);

struct PeriodicityResult {
  bool ok = true;
  std::size_t checked = 0;  // number of identity instances evaluated
  std::string failure;      // first failing identity, empty when ok
};

/// Checks the three families of determinant identities linking consecutive rows:
///   |d_{n+1} d_n; r_{n+1} r_n|    = |d_n d'_n; r_n r'_n|            (n >= 1)
///   |d_{n+1} d'_{n+1}; ...|        = |d_{n-1} d_{n-2}; ...|          (n >= 2)
///   both minors repeat with period 3                                  (n >= 3)
/// Throws TableTooShort when fewer than 5 rows are present.
PeriodicityResult verify_periodicity(const HelixTable& table);

/// (r_n, d_n) of the (0,d/2,d) family from the closed form in Q(sqrt((d-3)(d+1))).
/// Throws UnsupportedD for even d or d < 5; InternalInvariant if the value is not an integer.
struct ClosedFormValue {
  BigInt r;
  BigInt d;
};
ClosedFormValue closed_form(long d, std::size_t n);

struct LimitReport {
  Surd right_limit;
  Surd left_limit;
  Surd theta;  // d (A - (d-1)) / (A - (d-3)), computed independently of left_limit
  bool irrational = false;
  std::string decimal_right;
  std::string decimal_left;
};

LimitReport limit_slopes(long d);

/// Throws NotEquigeneratedSeed unless the table comes from (0,d/2,d) with d >= 5.
bool verify_ratio_bound(const HelixTable& table);

struct TwoSidedTable {
  long d = 0;
  long window = 0;                   // indices -window..window
  std::vector<ChernVector> entries;  // entries[n + window]

  const ChernVector& at(long n) const { return entries.at(static_cast<std::size_t>(n + window)); }
};

/// L_0..L_N by right mutation; L_{-1}..L_{-N} by right-mutating the dual triad
/// (L_1*, L'_1*, L_0*) and dualizing back.
TwoSidedTable extend_two_sided(long d, std::size_t window);

void require_family_d(long d);  // throws UnsupportedD unless odd and >= 5

}  // namespace helixkit

#endif  // HELIXKIT_HELIX_HELIX_HPP
