#include <doctest.h>

#include <random>

#include "helixkit/error.hpp"
#include "helixkit/helix/format.hpp"
#include "helixkit/helix/helix.hpp"
#include "helixkit/helix/sampling.hpp"

using namespace helixkit;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInvariant;
}

// For the (0, d/2, d) seed each invariant column obeys x_{n+1} = (d-1) x_n - x_{n-1}.
struct FamilyOracle {
  std::vector<BigInt> d, r, dp, rp;
  FamilyOracle(long dd, std::size_t horizon) {
    d = {0, dd};
    r = {1, 1};
    dp = {0, dd, BigInt(dd) * dd};
    rp = {0, 2, dd - 1};
    for (std::size_t n = 1; n < horizon; ++n) {
      d.push_back((dd - 1) * d[n] - d[n - 1]);
      r.push_back((dd - 1) * r[n] - r[n - 1]);
    }
    for (std::size_t n = 2; n < horizon; ++n) {
      dp.push_back((dd - 1) * dp[n] - dp[n - 1]);
      rp.push_back((dd - 1) * rp[n] - rp[n - 1]);
    }
  }
};

}  // namespace

TEST_CASE("seed validation") {
  CHECK(code_of([] { Seed(Rational(0), Rational(0), Rational(1)); }) == Errc::InvalidSeed);
  CHECK(code_of([] { Seed(Rational(1), Rational(1, 2), Rational(2)); }) == Errc::InvalidSeed);
  CHECK(Seed::equigenerated(5) == Seed(Rational(0), Rational(5, 2), Rational(5)));
  CHECK(Seed::equigenerated(7).family_d() == 7);
  CHECK_FALSE(Seed(Rational(0), Rational(1), Rational(2)).family_d());
  CHECK(Seed::equigenerated(5).triad() == Triad(ChernVector(1, 0), ChernVector(2, 5), ChernVector(1, 5)));
}

TEST_CASE("d=5 table through n=4") {
  HelixTable t = invariants_from_seed(Seed::equigenerated(5), 4);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[4].d == 280);
  CHECK(t.rows[4].r == 41);
  CHECK(*t.rows[4].dp == 355);
  CHECK(*t.rows[4].rp == 52);
  CHECK(t.rows[3].d == 75);
  CHECK(t.rows[3].r == 11);
  CHECK_FALSE(t.degenerate());
  CHECK(t.d_param == 5);
  CHECK(t.bundle(2) == ChernVector(3, 20));
  CHECK(t.primed_bundle(2) == ChernVector(4, 25));
  CHECK(code_of([&] { t.primed_bundle(0); }) == Errc::TableTooShort);
}

TEST_CASE("family tables match the linear recurrence") {
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L, 15L}) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 40);
    FamilyOracle o(d, 40);
    REQUIRE(t.rows.size() == 41);
    for (std::size_t n = 0; n <= 40; ++n) {
      CHECK(t.rows[n].d == o.d[n]);
      CHECK(t.rows[n].r == o.r[n]);
      if (n >= 1) {
        CHECK(*t.rows[n].dp == o.dp[n]);
        CHECK(*t.rows[n].rp == o.rp[n]);
      }
    }
  }
}

TEST_CASE("d=3 line bundles") {
  HelixTable t = invariants_from_seed(Seed::equigenerated(3), 30);
  for (const HelixRow& row : t.rows) {
    CHECK(row.r == 1);
    CHECK(row.d == 3 * static_cast<long>(row.n));
  }
}

TEST_CASE("mutation path reproduces the table rows") {
  for (long d : {5L, 7L, 9L}) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 20);
    Triad cur = Seed::equigenerated(d).triad();
    for (std::size_t n = 1; n < 20; ++n) {
      CHECK(cur.a() == t.bundle(n - 1));
      CHECK(cur.b() == t.primed_bundle(n));
      CHECK(cur.c() == t.bundle(n));
      HomDims h = hom_dims(cur);
      CHECK(h == HomDims{d, d, d});
      cur = mutate_triad_right(cur);
    }
  }
}

TEST_CASE("degenerate seeds stop after the first bad row") {
  HelixTable t = invariants_from_seed(Seed(Rational(0), Rational(1, 2), Rational(1)), 10);
  REQUIRE(t.degenerate());
  CHECK(*t.degenerate_at == 2);
  CHECK(t.rows.size() == 3);
  CHECK(t.rows[2].d == 0);
  CHECK(t.rows[2].r == -1);
  CHECK(*t.rows[2].rp == 0);
  CHECK(code_of([] { invariants_from_seed(Seed::equigenerated(5), 0); }) == Errc::TableTooShort);
}

TEST_CASE("positivity verdicts") {
  for (long d : {5L, 7L, 9L, 11L, 13L})
    CHECK(check_positivity(Seed::equigenerated(d)).verdict == PositivityReport::Verdict::Certified);
  PositivityReport three = check_positivity(Seed::equigenerated(3), 30);
  CHECK(three.verdict == PositivityReport::Verdict::VerifiedToHorizon);
  CHECK(three.describe() == "VerifiedToHorizon(30)");
  PositivityReport bad = check_positivity(Seed(Rational(0), Rational(1, 2), Rational(1)), 10);
  CHECK(bad.verdict == PositivityReport::Verdict::FailsAt);
  CHECK(bad.fail_n == 2);
  CHECK(bad.fail_component == RankComponent::R);
  CHECK(bad.describe() == "FailsAt n=2 (r)");
}

TEST_CASE("periodicity on the family and random seeds") {
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L}) {
    PeriodicityResult p = verify_periodicity(invariants_from_seed(Seed::equigenerated(d), 30));
    CHECK(p.ok);
    CHECK(p.checked > 0);
  }
  std::mt19937_64 rng(1234);
  int tested = 0;
  for (int i = 0; i < 100; ++i) {
    auto seed = random_nondegenerate_seed(rng, 30);
    REQUIRE(seed);
    PeriodicityResult p = verify_periodicity(invariants_from_seed(*seed, 30));
    CHECK_MESSAGE(p.ok, p.failure);
    ++tested;
  }
  CHECK(tested == 100);
}

TEST_CASE("periodicity rejects short or corrupted tables") {
  CHECK(code_of([] { verify_periodicity(invariants_from_seed(Seed::equigenerated(5), 3)); }) == Errc::TableTooShort);
  HelixTable t = invariants_from_seed(Seed::equigenerated(5), 10);
  t.rows[6].d += 1;
  CHECK_FALSE(verify_periodicity(t).ok);
}

TEST_CASE("closed form agrees with the recursion") {
  for (long d = 5; d <= 15; d += 2) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 40);
    for (std::size_t n = 0; n <= 40; ++n) {
      ClosedFormValue v = closed_form(d, n);
      CHECK(v.r == t.rows[n].r);
      CHECK(v.d == t.rows[n].d);
    }
  }
  CHECK(code_of([] { closed_form(4, 3); }) == Errc::UnsupportedD);
}

TEST_CASE("limit slopes") {
  LimitReport r = limit_slopes(5);
  CHECK(r.right_limit == Surd(Rational(5, 2), Rational(5, 4), BigInt(12)));
  CHECK(r.left_limit == Surd(Rational(5, 2), Rational(-5, 4), BigInt(12)));
  CHECK(r.theta == r.left_limit);
  CHECK(r.irrational);
  CHECK(r.decimal_right == "6.8301270");
  CHECK(r.decimal_left == "-1.8301270");
  CHECK(r.left_limit.sign() < 0);
  for (long d = 5; d <= 21; d += 2) {
    LimitReport x = limit_slopes(d);
    CHECK(x.irrational);
    CHECK(x.right_limit + x.left_limit == Surd::rational(Rational(d), x.right_limit.m()));
    CHECK(x.theta == x.left_limit);
  }
  CHECK(code_of([] { limit_slopes(6); }) == Errc::UnsupportedD);
  CHECK(code_of([] { limit_slopes(3); }) == Errc::UnsupportedD);
}

TEST_CASE("slopes increase toward the right limit") {
  for (long d = 5; d <= 13; d += 2) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 40);
    Surd limit = limit_slopes(d).right_limit;
    Surd prev_gap = limit - Surd::rational(*t.rows[0].slope(), limit.m());
    for (std::size_t n = 1; n <= 40; ++n) {
      CHECK(*t.rows[n - 1].slope() < *t.rows[n].slope());
      Surd gap = limit - Surd::rational(*t.rows[n].slope(), limit.m());
      CHECK(gap.sign() > 0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(prev_gap < Surd::rational(Rational(1, 1000000), limit.m()));
  }
}

TEST_CASE("ratio bound") {
  for (long d = 5; d <= 13; d += 2) CHECK(verify_ratio_bound(invariants_from_seed(Seed::equigenerated(d), 40)));
  CHECK(code_of([] { verify_ratio_bound(invariants_from_seed(Seed::equigenerated(3), 10)); }) ==
        Errc::NotEquigeneratedSeed);
}

TEST_CASE("two-sided extension") {
  TwoSidedTable t = extend_two_sided(5, 10);
  CHECK(t.at(0) == ChernVector(1, 0));
  CHECK(t.at(1) == ChernVector(1, 5));
  CHECK(t.at(-1) == ChernVector(3, -5));
  CHECK(t.at(-2) == ChernVector(11, -20));
  Surd left = limit_slopes(5).left_limit;
  for (long n = -10; n < 10; ++n) CHECK(t.at(n).slope() < t.at(n + 1).slope());
  for (long n = -10; n <= 0; ++n) CHECK(left < Surd::rational(t.at(n).slope(), left.m()));
  for (long d = 5; d <= 13; d += 2) {
    TwoSidedTable s = extend_two_sided(d, 12);
    HelixTable h = invariants_from_seed(Seed::equigenerated(d), 12);
    for (long n = 0; n <= 12; ++n) CHECK(s.at(n) == h.bundle(static_cast<std::size_t>(n)));
    // reflection: L_{1-k} = (r_k, d r_k - d_k)
    for (std::size_t k = 1; k <= 12; ++k)
      CHECK(s.at(1 - static_cast<long>(k)) == ChernVector(h.rows[k].r, d * h.rows[k].r - h.rows[k].d));
  }
}

TEST_CASE("table serialization") {
  HelixTable t = invariants_from_seed(Seed::equigenerated(5), 4);
  std::string csv = helix_table_csv(t);
  CHECK(csv.rfind("n,d,r,dp,rp,slope\n", 0) == 0);
  CHECK(csv.find("4,280,41,355,52,280/41\n") != std::string::npos);
  CHECK(csv.find("0,0,1,,,0/1\n") != std::string::npos);
  PositivityReport p = check_positivity(t.seed, 4);
  std::string json = helix_table_json(t, &p);
  CHECK(json.find("\"mu1p\": \"5/2\"") != std::string::npos);
  CHECK(json.find("{\"n\": 4, \"d\": 280, \"r\": 41, \"dp\": 355, \"rp\": 52}") != std::string::npos);
  CHECK(json.find("\"verdict\": \"Certified\"") != std::string::npos);
  CHECK(helix_table_json(t) == helix_table_json(t));
  CHECK(rational_decimal(Rational(280, 41), 7) == "6.8292683");

  // large integers stay exact
  HelixTable big = invariants_from_seed(Seed::equigenerated(13), 40);
  CHECK(helix_table_json(big).find(to_string(big.rows[40].d)) != std::string::npos);
}
