#include <iostream>
#include <string>
#include <vector>

#include "mstep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mstep::run_cli(args, std::cin, std::cout, std::cerr);
}
