#ifndef HELIXKIT_CLI_CLI_HPP
#define HELIXKIT_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace helixkit::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMutation = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataErr = 65;
inline constexpr int kExitNoInput = 66;

inline constexpr const char* kVersion = "0.1.0";

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helixkit::cli

#endif  // HELIXKIT_CLI_CLI_HPP
