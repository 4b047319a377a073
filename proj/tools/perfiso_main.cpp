#include <iostream>

#include "perfiso/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return perfiso::run_cli(args, std::cout, std::cerr);
}
