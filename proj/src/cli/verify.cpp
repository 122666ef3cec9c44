#include "helixkit/cli/verify.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "helixkit/bundles/chern.hpp"
#include "helixkit/error.hpp"
#include "helixkit/helix/helix.hpp"
#include "helixkit/helix/sampling.hpp"
#include "helixkit/quadratic/equigen.hpp"
#include "helixkit/quadratic/presentation.hpp"

namespace helixkit {

bool VerifyOutcome::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

std::string hom_string(const HomDims& h) {
  return "(" + to_string(h.ab) + "," + to_string(h.ac) + "," + to_string(h.bc) + ")";
}

// exact value of a plain decimal string such as "-0.000012"
Rational decimal_value(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational::parse(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return Rational(parse_bigint(digits), pow10(static_cast<unsigned>(s.size() - dot - 1)));
}

}  // namespace

CheckResult check_periodicity(const VerifyOptions& o) {
  const char* name = "periodicity";
  std::size_t tables = 0;
  std::vector<Seed> seeds;
  for (long d : o.d_values) seeds.push_back(Seed::equigenerated(d));
  seeds.push_back(Seed::equigenerated(3));
  std::mt19937_64 rng(o.rng_seed ^ 0x1111);
  const std::size_t horizon = std::max<std::size_t>(o.horizon, 4);
  for (std::size_t i = 0; i < o.seed_samples; ++i) {
    auto s = random_nondegenerate_seed(rng, horizon);
    if (!s) return fail(name, "could not sample a non-degenerate seed");
    seeds.push_back(*s);
  }
  for (const Seed& s : seeds) {
    HelixTable t = invariants_from_seed(s, horizon);
    PeriodicityResult r = verify_periodicity(t);
    if (!r.ok)
      return fail(name, "seed (" + s.mu0().to_fraction() + ", " + s.mu1p().to_fraction() + ", " +
                            s.mu1().to_fraction() + "): " + r.failure);
    ++tables;
  }
  return {name, true, std::to_string(tables) + " tables to n=" + std::to_string(horizon)};
}

CheckResult check_rotation(const VerifyOptions& o) {
  const char* name = "rotation";
  auto rotated = [](const Triad& t, std::string& why) {
    HomDims before = hom_dims(t);
    Triad next = mutate_triad_right(t);
    HomDims after = hom_dims(next);
    if (after != HomDims{before.ac, before.bc, before.ab}) {
      why = t.to_string() + " has hom " + hom_string(before) + " but R T = " + next.to_string() + " has " +
            hom_string(after);
      return std::optional<Triad>{};
    }
    return std::optional<Triad>{next};
  };
  std::string why;
  std::mt19937_64 rng(o.rng_seed ^ 0x2222);
  std::size_t random_count = std::max<std::size_t>(500, o.seed_samples);
  for (std::size_t i = 0; i < random_count; ++i) {
    auto t = random_right_mutable_triad(rng);
    if (!t) return fail(name, "could not sample a right-mutable triad");
    if (!rotated(*t, why)) return fail(name, why);
  }
  std::size_t chains = 0;
  for (long d : o.d_values) {
    Triad t = Seed::equigenerated(d).triad();
    for (int step = 0; step < 20; ++step) {
      auto next = rotated(t, why);
      if (!next) return fail(name, why);
      t = *next;
    }
    ++chains;
  }
  return {name, true, std::to_string(random_count) + " random triads, " + std::to_string(chains) + " 20-step chains"};
}

CheckResult check_roundtrip(const VerifyOptions& o) {
  const char* name = "roundtrip";
  std::mt19937_64 rng(o.rng_seed ^ 0x3333);
  std::size_t left_then_right = 0, right_then_left = 0;
  const std::size_t wanted = std::max<std::size_t>(1000, o.seed_samples);
  for (std::size_t guard = 0; (left_then_right < wanted || right_then_left < wanted) && guard < 200 * wanted; ++guard) {
    auto [e, f] = random_ordered_pair(rng);
    BigInt h = hom_dim(e, f);
    if (h * e.rank() > f.rank()) {
      ChernVector l = left_mutate(e, f);
      ChernVector back = right_mutate(l, e);
      if (back != f) return fail(name, "R_E L_E F != F for E=" + e.to_string() + ", F=" + f.to_string());
      ++left_then_right;
    }
    if (h * f.rank() > e.rank()) {
      ChernVector r = right_mutate(e, f);
      if (!r.is_simple()) return fail(name, "R_F E not simple for E=" + e.to_string() + ", F=" + f.to_string());
      if (!(f.slope() < r.slope())) return fail(name, "slope did not increase for E=" + e.to_string());
      ChernVector back = left_mutate(f, r);
      if (back != e) return fail(name, "L_F R_F E != E for E=" + e.to_string() + ", F=" + f.to_string());
      ++right_then_left;
    }
  }
  if (left_then_right < wanted || right_then_left < wanted) return fail(name, "not enough mutable pairs sampled");
  return {name, true, std::to_string(left_then_right) + " left-right and " + std::to_string(right_then_left) +
                          " right-left round trips"};
}

CheckResult check_closed_form(const VerifyOptions& o) {
  const char* name = "closed-form-equivalence";
  std::size_t cells = 0;
  for (long d : o.d_values) {
    if (d < 5 || d % 2 == 0) continue;
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), std::max<std::size_t>(o.horizon, 1));
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
      ClosedFormValue v = closed_form(d, n);
      if (v.r != t.rows[n].r || v.d != t.rows[n].d)
        return fail(name, "d=" + std::to_string(d) + ", n=" + std::to_string(n) + ": closed form (" + to_string(v.r) +
                              ", " + to_string(v.d) + ") vs table (" + to_string(t.rows[n].r) + ", " +
                              to_string(t.rows[n].d) + ")");
      ++cells;
    }
  }
  return {name, true, std::to_string(cells) + " (d, n) cells"};
}

CheckResult check_ratio_bound(const VerifyOptions& o) {
  const char* name = "ratio-bound";
  for (long d : o.d_values) {
    if (d < 5 || d % 2 == 0) continue;
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), std::max<std::size_t>(o.horizon, 2));
    if (!verify_ratio_bound(t)) return fail(name, "2 r_{n+1} < (d-1) r_n for d=" + std::to_string(d));
  }
  return {name, true, "2 r_{n+1} >= (d-1) r_n to n=" + std::to_string(o.horizon)};
}

CheckResult check_hilbert_crosscheck(const VerifyOptions& o) {
  const char* name = "hilbert-crosscheck";
  const std::size_t order = std::max<std::size_t>(o.horizon, 3);
  for (long d : o.d_values) {
    if (d != 3 && (d < 5 || d % 2 == 0)) continue;
    EquigenModel model(d);
    TruncatedSeries hb = hilbert_B(model, order);
    if (o.inject_hilbert_fault) hb[3] += Rational(1);
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), order);
    SeriesCheck c = cross_check_hilbert_series(hb, t, order);
    if (!c.ok)
      return fail(name, "d=" + std::to_string(d) + ": b_" + std::to_string(*c.first_mismatch) + " = " +
                            to_string(c.actual) + " but dim Hom(L_0, L_i) = " + to_string(c.expected));
  }
  return {name, true, "b_i = dim Hom(L_0, L_i) for i <= " + std::to_string(order)};
}

CheckResult check_normal_quotient(const VerifyOptions& o) {
  const char* name = "normal-quotient";
  const std::size_t order = std::max<std::size_t>(o.horizon, 6);
  for (long d : o.d_values) {
    if (d < 3) continue;
    SeriesCheck c = normal_quotient_check(EquigenModel(d), order);
    if (!c.ok)
      return fail(name, "d=" + std::to_string(d) + ": mismatch at t^" + std::to_string(*c.first_mismatch));
  }
  return {name, true, "H_B / (1 - t^3) = H_A to order " + std::to_string(order)};
}

CheckResult check_double_dual(const VerifyOptions& o) {
  const char* name = "double-dual";
  std::mt19937_64 rng(o.rng_seed ^ 0x4444);
  const std::size_t count = 50;
  for (std::size_t i = 0; i < count; ++i) {
    QuadraticPresentation p = random_presentation(rng);
    QuadraticPresentation dual = koszul_dual(p);
    for (std::size_t k = 0; k < p.period(); ++k)
      if (p.relations(k).rows() + dual.relations(k).rows() != p.tensor_dim(k))
        return fail(name, "dim I + dim I^perp != tensor dim for random presentation " + std::to_string(i));
    if (!double_dual_check(p)) return fail(name, "random presentation " + std::to_string(i) + " not recovered");
  }
  for (std::size_t n = 1; n <= 3; ++n)
    if (!double_dual_check(classical_euler_fixture(n).presentation))
      return fail(name, "symmetric fixture n=" + std::to_string(n));
  if (!double_dual_check(free_presentation(3))) return fail(name, "free algebra");
  return {name, true, std::to_string(count) + " random presentations plus fixtures"};
}

CheckResult check_koszulity_witness(const VerifyOptions& o) {
  const char* name = "koszulity-witness";
  auto first_failure = [](const KoszulityWitness& w) {
    for (const auto& e : w.entries)
      if (!e.pass) return "(j=" + std::to_string(e.j) + ", q=" + std::to_string(e.q) + ") sum " + to_string(e.sum);
    return std::string();
  };
  constexpr std::size_t kSymmetricOffset = 4;
  for (std::size_t n = 1; n <= 3; ++n) {
    ClassicalFixture fx = classical_euler_fixture(n);
    DimTable dual = degree_dims(koszul_dual(fx.presentation), fx.expected_dual_dims.size());
    for (std::size_t l = 0; l < fx.expected_dual_dims.size(); ++l)
      if (dual.at(0, l) != fx.expected_dual_dims[l])
        return fail(name, "symmetric n=" + std::to_string(n) + ": dual dim in degree " + std::to_string(l));
    KoszulityWitness w = koszulity_witness(fx.presentation, kSymmetricOffset);
    if (!w.all_pass) return fail(name, "symmetric n=" + std::to_string(n) + " " + first_failure(w));
    KoszulityWitness wd = koszulity_witness(koszul_dual(fx.presentation), kSymmetricOffset);
    if (!wd.all_pass) return fail(name, "exterior n=" + std::to_string(n) + " " + first_failure(wd));
  }
  constexpr std::size_t kEquigenOffset = 6;
  for (long d : o.d_values) {
    if (d < 3) continue;
    KoszulityWitness w = equigen_witness(EquigenModel(d), kEquigenOffset);
    if (!w.all_pass) return fail(name, "equigenerated d=" + std::to_string(d) + " " + first_failure(w));
  }
  return {name, true, "symmetric/exterior fixtures to offset 4, equigenerated models to offset 6"};
}

CheckResult check_limits(const VerifyOptions& o) {
  const char* name = "limits";
  const Rational tolerance(1, 1000000);
  for (long d : o.d_values) {
    if (d < 5 || d % 2 == 0) continue;
    const std::string tag = "d=" + std::to_string(d);
    LimitReport lim = limit_slopes(d);
    if (!lim.irrational) return fail(name, tag + ": limit reported rational");
    if (lim.left_limit.sign() >= 0) return fail(name, tag + ": left limit not negative");
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), std::max<std::size_t>(o.horizon, 2));
    const BigInt& m = lim.right_limit.m();
    std::optional<Surd> prev_gap;
    std::optional<Rational> prev_slope;
    for (const HelixRow& row : t.rows) {
      Rational mu = *row.slope();
      if (prev_slope && !(*prev_slope < mu)) return fail(name, tag + ": slopes not increasing at n=" + std::to_string(row.n));
      Surd gap = lim.right_limit - Surd::rational(mu, m);
      if (gap.sign() <= 0) return fail(name, tag + ": slope reached the limit at n=" + std::to_string(row.n));
      if (prev_gap && !(gap < *prev_gap)) return fail(name, tag + ": gap did not shrink at n=" + std::to_string(row.n));
      prev_gap = gap;
      prev_slope = mu;
    }
    if (!(*prev_gap < Surd::rational(tolerance, m)))
      return fail(name, tag + ": final gap not below 1e-6");
    if (!(decimal_value(surd_to_decimal(*prev_gap, 30)).abs() < tolerance))
      return fail(name, tag + ": 30-digit gap not below 1e-6");
  }
  return {name, true, "monotone slopes with shrinking gap, |mu_N - limit| < 1e-6"};
}

CheckResult check_two_sided(const VerifyOptions& o) {
  const char* name = "two-sided";
  constexpr std::size_t kWindow = 10;
  for (long d : o.d_values) {
    if (d < 5 || d % 2 == 0) continue;
    const std::string tag = "d=" + std::to_string(d);
    TwoSidedTable two = extend_two_sided(d, kWindow);
    HelixTable t = invariants_from_seed(Seed::equigenerated(d), kWindow + 1);
    LimitReport lim = limit_slopes(d);
    for (long n = -two.window; n <= two.window; ++n) {
      if (n > -two.window && !(two.at(n - 1).slope() < two.at(n).slope()))
        return fail(name, tag + ": slopes not increasing at n=" + std::to_string(n));
      if (!(lim.left_limit < Surd::rational(two.at(n).slope(), lim.left_limit.m())))
        return fail(name, tag + ": slope below the left limit at n=" + std::to_string(n));
      if (n < 0) {
        // L_{1-k} = L_1 (x) L_k^* numerically: (r_k, d r_k - d_k)
        const HelixRow& row = t.rows[static_cast<std::size_t>(1 - n)];
        ChernVector expect(row.r, BigInt(d) * row.r - row.d);
        if (two.at(n) != expect)
          return fail(name, tag + ": entry " + std::to_string(n) + " is " + two.at(n).to_string() + ", expected " +
                                expect.to_string());
      }
    }
  }
  return {name, true, "window [-10, 10]"};
}

VerifyOutcome run_verify(const VerifyOptions& options) {
  using Check = CheckResult (*)(const VerifyOptions&);
  const std::vector<std::pair<const char*, Check>> suites{
      {"periodicity", check_periodicity},
      {"rotation", check_rotation},
      {"roundtrip", check_roundtrip},
      {"closed-form-equivalence", check_closed_form},
      {"ratio-bound", check_ratio_bound},
      {"hilbert-crosscheck", check_hilbert_crosscheck},
      {"normal-quotient", check_normal_quotient},
      {"double-dual", check_double_dual},
      {"koszulity-witness", check_koszulity_witness},
      {"limits", check_limits},
      {"two-sided", check_two_sided},
  };
  std::vector<std::future<CheckResult>> pending;
  for (const auto& [name, fn] : suites) {
    pending.push_back(std::async(std::launch::async, [&options, name = name, fn = fn]() {
      try {
        return fn(options);
      } catch (const Error& e) {
        return CheckResult{name, false, std::string(errc_name(e.code())) + ": " + e.what()};
      }
    }));
  }
  VerifyOutcome out;
  for (auto& f : pending) out.checks.push_back(f.get());
  return out;
}

}  // namespace helixkit
