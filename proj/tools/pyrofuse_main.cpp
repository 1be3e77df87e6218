#include <iostream>
#include <string>
#include <vector>

#include "pyrofuse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pyrofuse::run_cli(args, std::cout, std::cerr);
}
