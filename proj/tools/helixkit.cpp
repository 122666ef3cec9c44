#include <iostream>
#include <string>
#include <vector>

#include "helixkit/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return helixkit::cli::run(args, std::cout, std::cerr);
}
