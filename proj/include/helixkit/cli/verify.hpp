#ifndef HELIXKIT_CLI_VERIFY_HPP
#define HELIXKIT_CLI_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace helixkit {

struct VerifyOptions {
  std::vector<long> d_values{5, 7, 9, 11, 13};
  std::size_t horizon = 40;
  std::size_t seed_samples = 100;
  std::uint64_t rng_seed = 0x5eedULL;
  /// Test builds only: perturb one H_B coefficient before the cross-check.
  bool inject_hilbert_fault = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // summary on success, first counterexample on failure
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs every invariant suite; independent checks run concurrently but results
/// always come back in a fixed order.
VerifyOutcome run_verify(const VerifyOptions& options);

// Individual suites, shared with the acceptance tests.
CheckResult check_periodicity(const VerifyOptions& o);
CheckResult check_rotation(const VerifyOptions& o);
CheckResult check_roundtrip(const VerifyOptions& o);
CheckResult check_closed_form(const VerifyOptions& o);
CheckResult check_ratio_bound(const VerifyOptions& o);
CheckResult check_hilbert_crosscheck(const VerifyOptions& o);
CheckResult check_normal_quotient(const VerifyOptions& o);
CheckResult check_double_dual(const VerifyOptions& o);
CheckResult check_koszulity_witness(const VerifyOptions& o);
CheckResult check_limits(const VerifyOptions& o);
CheckResult check_two_sided(const VerifyOptions& o);

}  // namespace helixkit

#endif  // HELIXKIT_CLI_VERIFY_HPP
