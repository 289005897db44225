#include <iostream>
#include <string>
#include <vector>

#include "hbcell_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hbcell::cli::run(args, std::cout, std::cerr);
}
