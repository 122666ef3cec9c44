// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helixkit/bundles/chern.hpp"
#include "helixkit/error.hpp"
#include "helixkit/exact/surd.hpp"
#include "helixkit/helix/format.hpp"
#include "helixkit/helix/helix.hpp"
#include "helixkit/helix/sampling.hpp"
#include "helixkit/quadratic/equigen.hpp"
#include "helixkit/quadratic/presentation.hpp"

using namespace helixkit;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string ds(long d) { return "d=" + std::to_string(d); }

Rational parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  return Rational(parse_bigint(digits), pow10(static_cast<unsigned>(text.size() - dot - 1)));
}

std::vector<BigInt> dims_of(const DimTable& t) {
  std::vector<BigInt> row;
  for (std::size_t n = 0; n <= t.max_degree; ++n) row.push_back(t.at(0, n));
  return row;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// 1
std::string hilbert_series() {
  constexpr std::size_t kOrder = 50;
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L}) {
    EquigenModel m(d);
    TruncatedSeries ha = hilbert_A(m, kOrder), hb = hilbert_B(m, kOrder);
    expect(series_mul(TruncatedSeries(kOrder, {1, -d, d, -1}), ha) == TruncatedSeries::one(kOrder),
           ds(d) + ": denominator times H_A is not 1");
    expect(hb == series_mul(TruncatedSeries(kOrder, {1, 0, 0, -1}), ha), ds(d) + ": H_B != (1 - t^3) H_A");
    for (std::size_t i = 0; i <= kOrder; ++i) expect(ha[i].is_integer() && hb[i].is_integer(), ds(d) + ": non-integer");
  }
  TruncatedSeries a5 = hilbert_A(EquigenModel(5), 4), b5 = hilbert_B(EquigenModel(5), 4);
  expect(a5 == TruncatedSeries(4, {1, 5, 20, 76, 285}), "d=5 H_A prefix");
  expect(b5 == TruncatedSeries(4, {1, 5, 20, 75, 280}), "d=5 H_B prefix");
  return "order 50, d in {3,5,7,9,11,13}; d=5 A: 1 5 20 76 285, B: 1 5 20 75 280";
}

// 2
std::string series_vs_geometry() {
  for (long d = 5; d <= 13; d += 2) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 30);
    TruncatedSeries hb = hilbert_B(EquigenModel(d), 30);
    const HelixRow& base = t.rows[0];
    for (std::size_t i = 1; i <= 30; ++i) {
      BigInt det = t.rows[i].d * base.r - base.d * t.rows[i].r;
      expect(hb[i] == Rational(det), ds(d) + ": b_" + std::to_string(i) + " = " + hb[i].to_short() +
                                         " but determinant = " + to_string(det));
    }
  }
  return "b_i = d_i r_0 - d_0 r_i for odd d in 5..13, 1 <= i <= 30";
}

// 3
std::string closed_form_equivalence() {
  std::size_t cells = 0;
  for (long d = 5; d <= 15; d += 2) {
    const BigInt m = BigInt(d - 3) * (d + 1);
    const Surd A = Surd::root(m);
    const Surd k = A * Rational(BigInt(d - 3), m);  // (d-3)/A
    const Surd lo = Surd::rational(Rational(d - 1), m) - A;
    const Surd hi = Surd::rational(Rational(d - 1), m) + A;
    const Surd dA = A * Rational(BigInt(d), m);  // d/A
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 40);
    for (unsigned n = 0; n <= 40; ++n) {
      const Rational half_n(BigInt(1), BigInt(BigInt(1) << n));
      Surd r = (lo.pow(n) * (k + Rational(1)) + hi.pow(n) * (Rational(1) - k)) * (half_n * Rational(1, 2));
      Surd dn = dA * (hi.pow(n) - lo.pow(n)) * half_n;
      expect(r.b().is_zero() && dn.b().is_zero(), ds(d) + ": irrational residue at n=" + std::to_string(n));
      expect(r.a() == Rational(t.rows[n].r) && dn.a() == Rational(t.rows[n].d),
             ds(d) + ": closed form differs at n=" + std::to_string(n));
      ClosedFormValue v = closed_form(d, n);
      expect(v.r == t.rows[n].r && v.d == t.rows[n].d, ds(d) + ": library closed form differs at n=" + std::to_string(n));
      ++cells;
    }
  }
  return std::to_string(cells) + " (d, n) cells, odd d in 5..15, n <= 40";
}

// 4
std::string minor_periodicity() {
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L}) {
    PeriodicityResult p = verify_periodicity(invariants_from_seed(Seed::equigenerated(d), 30));
    expect(p.ok, ds(d) + ": " + p.failure);
  }
  std::mt19937_64 rng(0xacce55);
  std::size_t seeds = 0, identities = 0;
  while (seeds < 100) {
    auto seed = random_nondegenerate_seed(rng, 30);
    expect(seed.has_value(), "could not sample a non-degenerate seed");
    PeriodicityResult p = verify_periodicity(invariants_from_seed(*seed, 30));
    expect(p.ok, "seed (" + seed->mu0().to_fraction() + ", " + seed->mu1p().to_fraction() + ", " +
                     seed->mu1().to_fraction() + "): " + p.failure);
    identities += p.checked;
    ++seeds;
  }
  return "family d in {3,...,13} and " + std::to_string(seeds) + " random seeds to n=30 (" +
         std::to_string(identities) + " random-seed identities)";
}

// 5
std::string hom_rotation() {
  auto rotated = [](const HomDims& h) { return HomDims{h.ac, h.bc, h.ab}; };
  std::mt19937_64 rng(0x707a7e);
  std::size_t triads = 0;
  for (; triads < 500; ++triads) {
    auto t = random_right_mutable_triad(rng);
    expect(t.has_value(), "could not sample a right-mutable triad");
    expect(hom_dims(mutate_triad_right(*t)) == rotated(hom_dims(*t)), "rotation fails on " + t->to_string());
  }
  Triad cur = Seed::equigenerated(5).triad();
  for (int step = 0; step < 20; ++step) {
    Triad next = mutate_triad_right(cur);
    expect(hom_dims(next) == rotated(hom_dims(cur)), "chain step " + std::to_string(step + 1));
    cur = next;
  }
  return std::to_string(triads) + " random triads and a 20-step chain from (1:0, 2:5, 1:5)";
}

// 6
std::string round_trips() {
  std::mt19937_64 rng(0x20017);
  std::size_t rl = 0, lr = 0;
  for (int i = 0; i < 100000 && (rl < 1000 || lr < 1000); ++i) {
    auto [e, f] = random_ordered_pair(rng);
    try {
      ChernVector l = left_mutate(e, f);
      expect(right_mutate(l, e) == f, "R(L(" + e.to_string() + ", " + f.to_string() + "))");
      ++rl;
    } catch (const Error& err) {
      if (err.code() != Errc::NotMutable) throw;
    }
    try {
      ChernVector r = right_mutate(e, f);
      expect(left_mutate(f, r) == e, "L(R(" + e.to_string() + ", " + f.to_string() + "))");
      ++lr;
    } catch (const Error& err) {
      if (err.code() != Errc::NotMutable) throw;
    }
  }
  expect(rl >= 1000 && lr >= 1000, "fewer than 1000 mutable pairs sampled");
  return std::to_string(rl) + " right-of-left and " + std::to_string(lr) + " left-of-right round trips";
}

// 7
std::string ratio_and_limits() {
  const Rational tolerance(1, 1000000);
  for (long d = 5; d <= 13; d += 2) {
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), 41);
    for (std::size_t n = 1; n <= 40; ++n)
      expect(2 * t.rows[n + 1].r >= (d - 1) * t.rows[n].r, ds(d) + ": ratio bound at n=" + std::to_string(n));
    LimitReport lim = limit_slopes(d);
    const BigInt& m = lim.right_limit.m();
    Surd prev_gap = lim.right_limit - Surd::rational(*t.rows[0].slope(), m);
    for (std::size_t n = 1; n <= 40; ++n) {
      expect(*t.rows[n - 1].slope() < *t.rows[n].slope(), ds(d) + ": slope not increasing at n=" + std::to_string(n));
      Surd gap = lim.right_limit - Surd::rational(*t.rows[n].slope(), m);
      expect(gap.sign() > 0 && gap < prev_gap, ds(d) + ": gap not shrinking at n=" + std::to_string(n));
      prev_gap = gap;
    }
    Rational approx_limit = parse_decimal(surd_to_decimal(lim.right_limit, 30));
    Rational approx_slope = parse_decimal(rational_decimal(*t.rows[40].slope(), 30));
    expect((approx_limit - approx_slope).abs() < tolerance, ds(d) + ": |mu_40 - limit| >= 1e-6");
    expect(lim.left_limit.sign() < 0, ds(d) + ": left limit not negative");
    expect(lim.irrational, ds(d) + ": limit flagged rational");
  }
  LimitReport five = limit_slopes(5);
  expect(five.decimal_right == "6.8301270", "d=5 right limit " + five.decimal_right);
  expect(five.decimal_left == "-1.8301270", "d=5 left limit " + five.decimal_left);
  return "odd d in 5..13 to n=40; d=5 limits 6.8301270 and -1.8301270";
}

// 8
std::string two_sided() {
  TwoSidedTable t = extend_two_sided(5, 10);
  expect(t.at(-1) == ChernVector(3, -5), "L_-1 = " + t.at(-1).to_string());
  expect(t.at(-2) == ChernVector(11, -20), "L_-2 = " + t.at(-2).to_string());
  Surd left = limit_slopes(5).left_limit;
  for (long n = -10; n < 10; ++n)
    expect(t.at(n).slope() < t.at(n + 1).slope(), "slopes not increasing at n=" + std::to_string(n));
  for (long n = -10; n <= 10; ++n)
    expect(left < Surd::rational(t.at(n).slope(), left.m()), "slope below left limit at n=" + std::to_string(n));
  return "d=5 window [-10, 10], L_-1 = 3:-5, L_-2 = 11:-20";
}

// 9
std::string koszul_engine() {
  QuadraticPresentation sym2 = classical_euler_fixture(1).presentation;
  QuadraticPresentation sym3 = classical_euler_fixture(2).presentation;
  expect(dims_of(degree_dims(koszul_dual(sym2), 3)) == ints({1, 2, 1, 0}), "2-variable dual dims");
  expect(dims_of(degree_dims(koszul_dual(sym3), 4)) == ints({1, 3, 3, 1, 0}), "3-variable dual dims");
  std::mt19937_64 rng(0xd0a1);
  for (int i = 0; i < 50; ++i) {
    QuadraticPresentation p = random_presentation(rng, 4, 3);
    expect(double_dual_check(p), "double dual fails on random presentation " + std::to_string(i));
  }
  for (std::size_t n = 1; n <= 3; ++n)
    expect(koszulity_witness(classical_euler_fixture(n).presentation, n + 1).all_pass,
           "witness fails for " + std::to_string(n + 1) + " variables");
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L}) {
    KoszulityWitness w = equigen_witness(EquigenModel(d), 6);
    for (const auto& e : w.entries)
      expect(e.sum == (e.q == e.j ? 1 : 0), ds(d) + ": witness sum " + to_string(e.sum) + " at q-j=" +
                                                std::to_string(e.q - e.j));
  }
  DimTable a = equigen_primal_dims(EquigenModel(5), 3), b = equigen_dual_dims(EquigenModel(5), 3);
  BigInt s = a.at(0, 3) - b.at(0, 1) * a.at(0, 2) + b.at(0, 2) * a.at(0, 1) - b.at(0, 3);
  expect(a.at(0, 3) == 76 && b.at(0, 1) * a.at(0, 2) == 100 && b.at(0, 2) * a.at(0, 1) == 25 && s == 0,
         "d=5 offset-3 sum");
  return "dual dims 1,2,1,0 and 1,3,3,1,0; 50 random double duals; witnesses exact (76 - 100 + 25 - 1 = 0)";
}

// 10
std::string normal_signature() {
  for (long d : {3L, 5L, 7L, 9L, 11L, 13L}) {
    EquigenModel m(d);
    TruncatedSeries quotient = series_mul(hilbert_B(m, 30), series_inverse(TruncatedSeries(30, {1, 0, 0, -1})));
    expect(quotient == hilbert_A(m, 30), ds(d) + ": H_B / (1 - t^3) != H_A");
    expect(normal_quotient_check(m, 30).ok, ds(d) + ": library check");
  }
  TruncatedSeries hb = hilbert_B(EquigenModel(5), 30);
  hb[11] += Rational(1);
  SeriesCheck c = normal_quotient_check_series(hb, hilbert_A(EquigenModel(5), 30), 30);
  expect(!c.ok && c.first_mismatch && *c.first_mismatch == 11, "perturbed series not caught at index 11");
  return "order 30 for d in {3,...,13}; perturbation at index 11 detected at 11";
}

// 11
std::string positivity() {
  for (long d = 5; d <= 13; d += 2) {
    PositivityReport p = check_positivity(Seed::equigenerated(d));
    expect(p.verdict == PositivityReport::Verdict::Certified, ds(d) + ": " + p.describe());
  }
  PositivityReport three = check_positivity(Seed::equigenerated(3), 40);
  expect(three.verdict == PositivityReport::Verdict::VerifiedToHorizon, "d=3: " + three.describe());
  HelixTable t = invariants_from_seed(Seed::equigenerated(3), 40);
  for (const HelixRow& row : t.rows)
    expect(row.r == 1 && row.d == 3 * static_cast<long>(row.n), "d=3 row " + std::to_string(row.n));
  PositivityReport bad = check_positivity(Seed(Rational(0), Rational(1, 2), Rational(1)), 10);
  expect(bad.verdict == PositivityReport::Verdict::FailsAt && bad.fail_n == 2 &&
             bad.fail_component == RankComponent::R,
         "(0,1/2,1): " + bad.describe());
  return "Certified for odd d in 5..13; " + three.describe() + " for d=3; " + bad.describe() + " for (0,1/2,1)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"hilbert-series", hilbert_series},
      {"series-vs-geometry", series_vs_geometry},
      {"closed-form", closed_form_equivalence},
      {"minor-periodicity", minor_periodicity},
      {"hom-rotation", hom_rotation},
      {"mutation-round-trips", round_trips},
      {"ratio-bound-and-limits", ratio_and_limits},
      {"two-sided-extension", two_sided},
      {"koszul-duality", koszul_engine},
      {"normal-quotient", normal_signature},
      {"positivity", positivity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    std::string verdict;
    try {
      verdict = "PASS " + std::to_string(i + 1) + " " + name + ": " + fn();
    } catch (const Failure& f) {
      verdict = "FAIL " + std::to_string(i + 1) + " " + name + ": " + f.what;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL " + std::to_string(i + 1) + " " + name + ": exception: " + e.what();
      ++failures;
    }
    std::cout << verdict << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
