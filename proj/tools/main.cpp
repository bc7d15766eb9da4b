#include <iostream>
#include <string>
#include <vector>

#include "cnash/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cnash::cli::run(args, std::cin, std::cout, std::cerr);
}
