#include <iostream>

#include "carath/harness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return carath::harness::run_cli(args, std::cout, std::cerr);
}
