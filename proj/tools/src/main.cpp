#include <iostream>

#include "crossbessel_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crossbessel::cli::run_cli(args, std::cout, std::cerr);
}
