#include <doctest.h>

#include <sstream>

#include "helixkit/cli/cli.hpp"

TEST_CASE("an injected hilbert fault fails verify") {
  std::ostringstream out, err;
  int code = helixkit::cli::run({"verify", "--inject-fault", "hilbert"}, out, err);
  CHECK(code == 2);
  CHECK(out.str().find("FAIL hilbert-crosscheck: d=5: b_3") != std::string::npos);
  CHECK(out.str().find("PASS periodicity:") != std::string::npos);
}

TEST_CASE("without the flag the faulty build still passes") {
  std::ostringstream out, err;
  CHECK(helixkit::cli::run({"verify", "--d-range", "5", "--horizon", "20"}, out, err) == 0);
}
