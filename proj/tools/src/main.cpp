#include <iostream>

#include "grig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grig::cli::run_cli(args, std::cout, std::cerr);
}
