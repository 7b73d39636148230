#include <iostream>
#include <string>
#include <vector>

#include "eqhuff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eqhuff::cli::run(args, std::cin, std::cout, std::cerr);
}
