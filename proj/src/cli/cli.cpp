#include "helixkit/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "helixkit/bundles/chern.hpp"
#include "helixkit/cli/verify.hpp"
#include "helixkit/error.hpp"
#include "helixkit/helix/format.hpp"
#include "helixkit/helix/helix.hpp"
#include "helixkit/quadratic/equigen.hpp"
#include "helixkit/quadratic/io.hpp"
#include "helixkit/quadratic/presentation.hpp"

namespace helixkit::cli {

namespace {

/// A failure already reported to the user, carrying its exit code.
struct Exit {
  int code;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError: return kExitUsage;
    case Errc::NotMutable: return kExitMutation;
    case Errc::InternalInvariant: return kExitMutation;
    default: return kExitDataErr;
  }
}

std::size_t dim_cap_from_env() {
  const char* raw = std::getenv("HELIXKIT_DIM_CAP");
  if (!raw || !*raw) return kDefaultDimCap;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(raw, &pos);
    if (pos != std::string(raw).size() || v == 0) throw std::invalid_argument("cap");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, std::string("HELIXKIT_DIM_CAP is not a positive integer: ") + raw);
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string coefficient_row(const TruncatedSeries& s) {
  std::vector<std::string> parts;
  for (const Rational& c : s.coefficients()) parts.push_back(c.to_short());
  return join(parts, " ");
}

std::vector<long> parse_d_range(const std::string& text) {
  std::vector<long> out;
  auto colon = text.find(':');
  try {
    if (colon != std::string::npos) {
      long lo = std::stol(text.substr(0, colon));
      long hi = std::stol(text.substr(colon + 1));
      for (long d = lo; d <= hi; ++d)
        if (d == 3 || (d >= 5 && d % 2 == 1)) out.push_back(d);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    }
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad --d-range '" + text + "' (use lo:hi or a,b,c)");
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "--d-range selects no admissible d");
  for (long d : out)
    if (d != 3 && (d < 5 || d % 2 == 0))
      throw Error(Errc::UnsupportedD, "--d-range value " + std::to_string(d) + " is not 3 or an odd integer >= 5");
  return out;
}

// ---- seed-table ----------------------------------------------------------

struct SeedTableArgs {
  std::vector<std::string> slopes;
  std::size_t n = 10;
  std::string format = "table";
  bool two_sided = false;
};

int run_seed_table(const SeedTableArgs& a, std::ostream& out, std::ostream& err) {
  Seed seed(Rational::parse(a.slopes.at(0)), Rational::parse(a.slopes.at(1)), Rational::parse(a.slopes.at(2)));
  if (a.n < 1) throw Error(Errc::InvalidArgument, "--n must be at least 1");

  if (a.two_sided) {
    auto d = seed.family_d();
    if (!d || *d < 5) throw Error(Errc::UnsupportedD, "--two-sided needs a (0, d/2, d) seed with d odd >= 5");
    TwoSidedTable t = extend_two_sided(*d, a.n);
    if (a.format == "json") out << two_sided_json(t);
    else if (a.format == "csv") out << two_sided_csv(t);
    else {
      LimitReport lim = limit_slopes(*d);
      out << "two-sided helix d=" << *d << ", window [-" << a.n << ", " << a.n << "]\n"
          << two_sided_text(t) << "left limit ≈ " << lim.decimal_left << ", right limit ≈ " << lim.decimal_right
          << '\n';
    }
    return kExitOk;
  }

  HelixTable table = invariants_from_seed(seed, a.n);
  PositivityReport positivity = check_positivity(seed, a.n);
  if (a.format == "json") {
    out << helix_table_json(table, &positivity);
  } else if (a.format == "csv") {
    out << helix_table_csv(table);
    err << "positivity: " << positivity.describe() << '\n';
  } else {
    out << "seed (" << seed.mu0().to_fraction() << ", " << seed.mu1p().to_fraction() << ", "
        << seed.mu1().to_fraction() << ")";
    if (table.d_param) out << "  d=" << *table.d_param;
    out << '\n' << helix_table_text(table);
    if (table.degenerate()) out << "degenerate at n=" << *table.degenerate_at << '\n';
    out << "positivity: " << positivity.describe() << '\n';
    if (table.rows.size() >= 5) {
      PeriodicityResult p = verify_periodicity(table);
      out << "periodicity: " << (p.ok ? "PASS" : "FAIL " + p.failure) << '\n';
    }
  }
  return kExitOk;
}

// ---- triad ---------------------------------------------------------------

struct TriadArgs {
  std::vector<std::string> members;
  bool right = false;
  bool left = false;
  std::size_t steps = 1;
};

std::string triad_line(std::size_t step, const Triad& t) {
  HomDims h = hom_dims(t);
  return "step " + std::to_string(step) + ": " + t.to_string() + "  hom (" + to_string(h.ab) + "," + to_string(h.ac) +
         "," + to_string(h.bc) + ")  slopes (" + t.a().slope().to_fraction() + ", " + t.b().slope().to_fraction() +
         ", " + t.c().slope().to_fraction() + ")";
}

int run_triad(const TriadArgs& a, std::ostream& out, std::ostream& err) {
  if (a.right == a.left) throw Error(Errc::ParseError, "choose exactly one of --right or --left");
  Triad t(ChernVector::parse(a.members.at(0)), ChernVector::parse(a.members.at(1)),
          ChernVector::parse(a.members.at(2)));
  out << triad_line(0, t) << '\n';
  for (std::size_t s = 1; s <= a.steps; ++s) {
    try {
      t = a.right ? mutate_triad_right(t) : mutate_triad_left(t);
    } catch (const TriadMutationError& e) {
      err << "NotMutable at member " << e.member() << " in step " << s << ": " << e.what() << '\n';
      return kExitMutation;
    }
    out << triad_line(s, t) << '\n';
  }
  return kExitOk;
}

// ---- hilbert -------------------------------------------------------------

struct HilbertArgs {
  long d = 0;
  std::size_t order = 10;
  std::string format = "table";
};

int run_hilbert(const HilbertArgs& a, std::ostream& out) {
  if (a.d < 3) throw Error(Errc::UnsupportedD, "hilbert needs d >= 3");
  EquigenModel model(a.d);
  const std::size_t order = std::max<std::size_t>(a.order, 3);
  TruncatedSeries ha = hilbert_A(model, order).with_order(a.order);
  TruncatedSeries hb = hilbert_B(model, order).with_order(a.order);

  std::string cross = "n/a";
  if (a.d == 3 || a.d % 2 == 1) {
    SeriesCheck c = cross_check_hilbert(model, std::max<std::size_t>(a.order, 1));
    cross = c.ok ? "PASS" : "FAIL at i=" + std::to_string(*c.first_mismatch);
  }
  SeriesCheck nq = normal_quotient_check(model, std::max<std::size_t>(a.order, 6));
  std::string normal = nq.ok ? "PASS" : "FAIL at i=" + std::to_string(*nq.first_mismatch);

  if (a.format == "json") {
    auto arr = [](const TruncatedSeries& s) {
      std::vector<std::string> parts;
      for (const Rational& c : s.coefficients()) parts.push_back(to_string(c.num()));
      return "[" + join(parts, ", ") + "]";
    };
    out << "{\"d\": " << a.d << ", \"order\": " << a.order << ", \"A\": " << arr(ha) << ", \"B\": " << arr(hb)
        << ", \"cross_check\": \"" << cross << "\", \"normal_quotient\": \"" << normal << "\"}\n";
  } else {
    out << "A: " << coefficient_row(ha) << '\n'
        << "B: " << coefficient_row(hb) << '\n'
        << "cross-check: " << cross << '\n'
        << "normal-quotient: " << normal << '\n';
  }
  return kExitOk;
}

// ---- koszul-dual ---------------------------------------------------------

struct KoszulArgs {
  std::string input;
  std::string out_path;
  std::string dims_csv;
  bool check_double_dual = false;
  int dims = -1;
};

std::string dims_line(const DimTable& t, std::size_t i) {
  std::vector<std::string> parts;
  for (std::size_t n = 0; n <= t.max_degree; ++n) parts.push_back(to_string(t.at(i, n)));
  return join(parts, " ");
}

int run_koszul_dual(const KoszulArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.input);
  if (!in) {
    err << "cannot read " << a.input << '\n';
    return kExitNoInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<QuadraticPresentation> ps = parse_presentations(buf.str());
  std::vector<QuadraticPresentation> duals;
  for (const auto& p : ps) duals.push_back(koszul_dual(p));
  const std::size_t cap = dim_cap_from_env();

  std::string dual_text = duals.size() == 1 ? presentation_json(duals.front()) : presentations_json(duals);
  if (!a.out_path.empty()) {
    std::ofstream o(a.out_path);
    if (!o) {
      err << "cannot write " << a.out_path << '\n';
      return kExitNoInput;
    }
    o << dual_text;
  } else {
    out << dual_text;
  }
  // reports share stdout only when the dual went to a file
  std::ostream& report = a.out_path.empty() ? err : out;

  bool all_ok = true;
  if (a.check_double_dual) {
    std::size_t good = 0;
    for (const auto& p : ps) good += double_dual_check(p) ? 1 : 0;
    bool ok = good == ps.size();
    all_ok = all_ok && ok;
    report << "double-dual: " << (ok ? "PASS" : "FAIL") << " (" << good << "/" << ps.size() << ")\n";
  }
  if (a.dims >= 0) {
    const auto d = static_cast<std::size_t>(a.dims);
    std::string csv;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      DimTable primal = degree_dims(ps[k], d, cap);
      DimTable dual = degree_dims(duals[k], d, cap);
      std::string prefix = ps.size() > 1 ? "[" + std::to_string(k) + "] " : "";
      for (std::size_t i = 0; i < primal.period; ++i) {
        report << prefix << "dims i=" << i << ": " << dims_line(primal, i) << '\n';
        report << prefix << "dual dims i=" << i << ": " << dims_line(dual, i) << '\n';
      }
      KoszulityWitness w = witness_from_dims(primal, dual, d);
      report << prefix << "koszulity: " << w.label() << " (necessary condition, offsets <= " << d << ")\n";
      for (const auto& e : w.entries)
        if (!e.pass) report << prefix << "  fails at j=" << e.j << " q=" << e.q << ": sum " << to_string(e.sum) << '\n';
      if (k == 0) csv = dim_table_csv(dual);
    }
    if (!a.dims_csv.empty()) {
      std::ofstream o(a.dims_csv);
      if (!o) {
        err << "cannot write " << a.dims_csv << '\n';
        return kExitNoInput;
      }
      o << csv;
    }
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

// ---- limits --------------------------------------------------------------

int run_limits(long d, const std::string& format, std::ostream& out) {
  LimitReport lim = limit_slopes(d);
  if (format == "json") {
    out << "{\"d\": " << d << ", \"radicand\": " << to_string(lim.right_limit.m()) << ", \"right\": {\"a\": \""
        << lim.right_limit.a().to_fraction() << "\", \"b\": \"" << lim.right_limit.b().to_fraction()
        << "\", \"approx\": \"" << lim.decimal_right << "\"}, \"left\": {\"a\": \"" << lim.left_limit.a().to_fraction()
        << "\", \"b\": \"" << lim.left_limit.b().to_fraction() << "\", \"approx\": \"" << lim.decimal_left
        << "\"}, \"irrational\": " << (lim.irrational ? "true" : "false") << "}\n";
    return kExitOk;
  }
  out << "d: " << d << '\n'
      << "right limit: " << lim.right_limit.to_exact() << "  ≈ " << lim.decimal_right << '\n'
      << "left limit: " << lim.left_limit.to_exact() << "  ≈ " << lim.decimal_left << '\n'
      << "theta: " << lim.theta.to_exact() << '\n'
      << "irrational: " << (lim.irrational ? "yes" : "no") << '\n';
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int run_verify_cmd(const VerifyOptions& o, std::ostream& out) {
  VerifyOutcome outcome = run_verify(o);
  for (const auto& c : outcome.checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << (outcome.all_pass() ? "all checks passed" : "verification FAILED") << '\n';
  return outcome.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical invariants of elliptic helices of period 3", "helixkit"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print the version banner");

  SeedTableArgs seed_args;
  auto* seed_cmd = app.add_subcommand("seed-table", "Invariants generated by a seed (mu0, mu'1, mu1)");
  seed_cmd->add_option("slopes", seed_args.slopes, "Three slopes as p/q")->expected(3)->required();
  seed_cmd->add_option("--n", seed_args.n, "Horizon (last row index)")->capture_default_str();
  seed_cmd->add_option("--format", seed_args.format)->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
  seed_cmd->add_flag("--two-sided", seed_args.two_sided, "Window [-n, n] of the (0,d/2,d) helix");

  TriadArgs triad_args;
  auto* triad_cmd = app.add_subcommand("triad", "Iterate triad mutations");
  triad_cmd->add_option("members", triad_args.members, "Three bundles as rank:degree")->expected(3)->required();
  triad_cmd->add_flag("--right", triad_args.right);
  triad_cmd->add_flag("--left", triad_args.left);
  triad_cmd->add_option("--steps", triad_args.steps)->capture_default_str();

  HilbertArgs hilbert_args;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of A and B for an equigenerated helix");
  hilbert_cmd->add_option("--d", hilbert_args.d)->required();
  hilbert_cmd->add_option("--order", hilbert_args.order)->capture_default_str();
  hilbert_cmd->add_option("--format", hilbert_args.format)->check(CLI::IsMember({"table", "json"}));

  KoszulArgs koszul_args;
  auto* koszul_cmd = app.add_subcommand("koszul-dual", "Koszul dual of a quadratic presentation file");
  koszul_cmd->add_option("input", koszul_args.input)->required();
  koszul_cmd->add_option("--out", koszul_args.out_path, "Write the dual presentation here");
  koszul_cmd->add_flag("--check-double-dual", koszul_args.check_double_dual);
  koszul_cmd->add_option("--dims", koszul_args.dims, "Degree dimensions and Koszulity witness up to D");
  koszul_cmd->add_option("--dims-csv", koszul_args.dims_csv, "Write the dual's dimension table as CSV");

  long limits_d = 0;
  std::string limits_format = "text";
  auto* limits_cmd = app.add_subcommand("limits", "Limit slopes of the (0,d/2,d) helix");
  limits_cmd->add_option("--d", limits_d)->required();
  limits_cmd->add_option("--format", limits_format)->check(CLI::IsMember({"text", "json"}));

  VerifyOptions verify_opts;
  std::string d_range;
  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
  verify_cmd->add_option("--d-range", d_range, "lo:hi or a,b,c (default 5:13)");
  verify_cmd->add_option("--horizon", verify_opts.horizon)->capture_default_str();
  verify_cmd->add_option("--seed-samples", verify_opts.seed_samples)->capture_default_str();
  verify_cmd->add_option("--rng-seed", verify_opts.rng_seed)->capture_default_str();
#ifdef HELIXKIT_ENABLE_FAULT_INJECTION
  std::string fault;
  verify_cmd->add_option("--inject-fault", fault)->check(CLI::IsMember({"hilbert"}));
#endif

  std::vector<const char*> argv{"helixkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (show_version) {
      out << "helixkit " << kVersion << '\n';
      return kExitOk;
    }
    if (*seed_cmd) return run_seed_table(seed_args, out, err);
    if (*triad_cmd) return run_triad(triad_args, out, err);
    if (*hilbert_cmd) return run_hilbert(hilbert_args, out);
    if (*koszul_cmd) return run_koszul_dual(koszul_args, out, err);
    if (*limits_cmd) return run_limits(limits_d, limits_format, out);
    if (*verify_cmd) {
      if (!d_range.empty()) verify_opts.d_values = parse_d_range(d_range);
#ifdef HELIXKIT_ENABLE_FAULT_INJECTION
      verify_opts.inject_hilbert_fault = fault == "hilbert";
#endif
      return run_verify_cmd(verify_opts, out);
    }
    err << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace helixkit::cli
