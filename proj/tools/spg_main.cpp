#include <iostream>

#include "spg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spg::cli::cli_main(args, std::cout, std::cerr);
}
