#include <iostream>
#include <string>
#include <vector>

#include "extnum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return extnum::run_command(args, std::cin, std::cout, std::cerr);
}
