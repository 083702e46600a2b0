#include <iostream>
#include <string>
#include <vector>

#include "ci2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ci2::cli_run(args, std::cout, std::cerr);
}
