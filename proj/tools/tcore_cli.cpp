#include <iostream>
#include <string>
#include <vector>

#include "tcore/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcore::run_cli(args, std::cout, std::cerr);
}
