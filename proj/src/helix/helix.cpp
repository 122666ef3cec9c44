#include "helixkit/helix/helix.hpp"

#include <sstream>

namespace helixkit {

Seed::Seed(Rational mu0, Rational mu1p, Rational mu1)
    : mu0_(std::move(mu0)), mu1p_(std::move(mu1p)), mu1_(std::move(mu1)) {
  if (!(mu0_ < mu1p_ && mu1p_ < mu1_))
    throw Error(Errc::InvalidSeed, "seed slopes must strictly increase: " + mu0_.to_fraction() + ", " +
                                       mu1p_.to_fraction() + ", " + mu1_.to_fraction());
}

Seed Seed::equigenerated(long d) { return Seed(Rational(0), Rational(d, 2), Rational(d)); }

std::optional<long> Seed::family_d() const {
  if (!mu0_.is_zero() || !mu1_.is_integer()) return std::nullopt;
  BigInt d = mu1_.num();
  if (d < 3 || d % 2 == 0 || !d.fits_slong_p()) return std::nullopt;
  if (mu1p_ != Rational(d, BigInt(2))) return std::nullopt;
  return d.get_si();
}

Triad Seed::triad() const {
  return Triad(ChernVector(mu0_.den(), mu0_.num()), ChernVector(mu1p_.den(), mu1p_.num()),
               ChernVector(mu1_.den(), mu1_.num()));
}

std::optional<Rational> HelixRow::slope() const {
  if (r == 0) return std::nullopt;
  return Rational(d, r);
}

ChernVector HelixTable::bundle(std::size_t n) const {
  const HelixRow& row = rows.at(n);
  return ChernVector(row.r, row.d);
}

ChernVector HelixTable::primed_bundle(std::size_t n) const {
  const HelixRow& row = rows.at(n);
  if (!row.rp) throw Error(Errc::TableTooShort, "row 0 has no primed invariants");
  return ChernVector(*row.rp, *row.dp);
}

HelixTable invariants_from_seed(const Seed& seed, std::size_t horizon) {
  if (horizon < 1) throw Error(Errc::TableTooShort, "horizon must be at least 1");
  HelixTable table{seed, seed.family_d(), {}, std::nullopt};
  table.rows.reserve(horizon + 1);
  table.rows.push_back({0, seed.mu0().num(), seed.mu0().den(), std::nullopt, std::nullopt});
  table.rows.push_back({1, seed.mu1().num(), seed.mu1().den(), seed.mu1p().num(), seed.mu1p().den()});

  for (std::size_t i = 2; i <= horizon; ++i) {
    const HelixRow& prev = table.rows[i - 1];
    const HelixRow& prev2 = table.rows[i - 2];
    BigInt h_unprimed = det2(prev.d, prev2.d, prev.r, prev2.r);
    BigInt h_primed = det2(prev.d, *prev.dp, prev.r, *prev.rp);
    HelixRow row;
    row.n = i;
    row.dp = h_unprimed * prev.d - prev2.d;
    row.rp = h_unprimed * prev.r - prev2.r;
    row.d = h_primed * prev.d - *prev.dp;
    row.r = h_primed * prev.r - *prev.rp;
    bool bad = row.r <= 0 || *row.rp <= 0;
    table.rows.push_back(std::move(row));
    if (bad) {
      table.degenerate_at = i;
      break;
    }
  }
  return table;
}

std::string PositivityReport::describe() const {
  switch (verdict) {
    case Verdict::Certified:
      return "Certified";
    case Verdict::VerifiedToHorizon:
      return "VerifiedToHorizon(" + std::to_string(horizon) + ")";
    case Verdict::FailsAt:
      return "FailsAt n=" + std::to_string(fail_n) + " (" +
             (fail_component == RankComponent::R ? "r" : "r'") + ")";
  }
  return "";
}

PositivityReport check_positivity(const Seed& seed, std::size_t horizon) {
  HelixTable table = invariants_from_seed(seed, std::max<std::size_t>(horizon, 1));
  PositivityReport report;
  report.horizon = horizon;
  for (const HelixRow& row : table.rows) {
    if (row.r <= 0 || (row.rp && *row.rp <= 0)) {
      report.verdict = PositivityReport::Verdict::FailsAt;
      report.fail_n = row.n;
      report.fail_component = row.r <= 0 ? RankComponent::R : RankComponent::RPrime;
      if (seed.family_d() && *seed.family_d() >= 5)
        throw Error(Errc::InternalInvariant, "certified seed family produced a non-positive rank");
      return report;
    }
  }
  auto d = seed.family_d();
  report.verdict = (d && *d >= 5) ? PositivityReport::Verdict::Certified
                                  : PositivityReport::Verdict::VerifiedToHorizon;
  return report;
}

PeriodicityResult verify_periodicity(const HelixTable& table) {
  const auto& rows = table.rows;
  if (rows.size() < 5)
    throw Error(Errc::TableTooShort, "periodicity needs at least 5 rows, table has " + std::to_string(rows.size()));

  auto step = [&](std::size_t hi, std::size_t lo) {  // |d_hi d_lo; r_hi r_lo|
    return det2(rows[hi].d, rows[lo].d, rows[hi].r, rows[lo].r);
  };
  auto own = [&](std::size_t n) {  // |d_n d'_n; r_n r'_n|
    return det2(rows[n].d, *rows[n].dp, rows[n].r, *rows[n].rp);
  };

  PeriodicityResult result;
  auto expect = [&](const BigInt& lhs, const BigInt& rhs, const char* family, std::size_t n) {
    ++result.checked;
    if (lhs == rhs || !result.ok) return;
    result.ok = false;
    std::ostringstream os;
    os << family << " fails at n=" << n << ": " << to_string(lhs) << " != " << to_string(rhs);
    result.failure = os.str();
  };

  const std::size_t last = rows.size() - 1;
  for (std::size_t n = 1; n + 1 <= last; ++n) {
    expect(step(n + 1, n), own(n), "step-vs-own", n);
    if (n >= 2) expect(own(n + 1), step(n - 1, n - 2), "own-vs-step", n);
    if (n >= 3) {
      expect(step(n + 1, n), step(n - 2, n - 3), "step-period-3", n);
      expect(own(n + 1), own(n - 2), "own-period-3", n);
    }
  }
  return result;
}

void require_family_d(long d) {
  if (d < 5 || d % 2 == 0)
    throw Error(Errc::UnsupportedD, "d must be an odd integer >= 5, got " + std::to_string(d));
}

namespace {

BigInt radicand(long d) { return BigInt(d - 3) * BigInt(d + 1); }

Rational pow2_inverse(std::size_t k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rational(BigInt(1), p);
}

}  // namespace

ClosedFormValue closed_form(long d, std::size_t n) {
  require_family_d(d);
  const BigInt m = radicand(d);
  const Surd root = Surd::root(m);
  const Surd one = Surd::rational(Rational(1), m);
  const Surd lower = Surd::rational(Rational(d - 1), m) - root;  // d - 1 - A
  const Surd upper = Surd::rational(Rational(d - 1), m) + root;  // d - 1 + A
  const Surd w = Surd::rational(Rational(d - 3), m) / root;      // (d - 3) / A
  const auto k = static_cast<unsigned>(n);

  Surd lo_n = lower.pow(k);
  Surd up_n = upper.pow(k);
  Surd r = (lo_n * (w + one) + up_n * (one - w)) * pow2_inverse(n + 1);
  Surd deg = (Surd::rational(Rational(d), m) / root) * (up_n - lo_n) * pow2_inverse(n);

  for (const Surd* s : {&r, &deg})
    if (!s->is_rational() || !s->a().is_integer())
      throw Error(Errc::InternalInvariant, "closed form did not evaluate to an integer at d=" + std::to_string(d) +
                                               ", n=" + std::to_string(n) + ": " + s->to_exact());
  return {r.a().num(), deg.a().num()};
}

LimitReport limit_slopes(long d) {
  require_family_d(d);
  const BigInt m = radicand(d);
  const Surd root = Surd::root(m);
  const Surd dd = Surd::rational(Rational(d), m);

  LimitReport report;
  report.right_limit = (dd * Rational(2)) / (root - Rational(d - 3));
  report.left_limit = dd - report.right_limit;
  report.theta = dd * (root - Rational(d - 1)) / (root - Rational(d - 3));
  if (report.theta != report.left_limit)
    throw Error(Errc::InternalInvariant, "left limit and theta disagree");
  report.irrational = !is_perfect_square(m);
  report.decimal_right = surd_to_decimal(report.right_limit, 7);
  report.decimal_left = surd_to_decimal(report.left_limit, 7);
  return report;
}

bool verify_ratio_bound(const HelixTable& table) {
  if (!table.d_param || *table.d_param < 5)
    throw Error(Errc::NotEquigeneratedSeed, "ratio bound applies to the (0,d/2,d) family with d >= 5");
  if (table.rows.size() < 3) throw Error(Errc::TableTooShort, "ratio bound needs at least 3 rows");
  const BigInt dm1(*table.d_param - 1);
  for (std::size_t n = 1; n + 1 < table.rows.size(); ++n)
    if (2 * table.rows[n + 1].r < dm1 * table.rows[n].r) return false;
  return true;
}

TwoSidedTable extend_two_sided(long d, std::size_t window) {
  require_family_d(d);
  const Seed seed = Seed::equigenerated(d);
  HelixTable forward = invariants_from_seed(seed, std::max<std::size_t>(window, 1));

  TwoSidedTable out;
  out.d = d;
  out.window = static_cast<long>(window);
  std::vector<ChernVector> left;  // L_{-1}, L_{-2}, ...
  Triad dual = dualize_triad(seed.triad());  // (L_1*, L'_1*, L_0*); its helix is L_1*, L_0*, L_{-1}*, ...
  for (std::size_t k = 2; k <= window + 1; ++k) {
    dual = mutate_triad_right(dual);
    left.push_back(dualize(dual.c()));
  }
  out.entries.reserve(2 * window + 1);
  for (auto it = left.rbegin(); it != left.rend(); ++it) out.entries.push_back(*it);
  for (std::size_t n = 0; n <= window; ++n) out.entries.push_back(forward.bundle(n));
  return out;
}

}  // namespace helixkit
