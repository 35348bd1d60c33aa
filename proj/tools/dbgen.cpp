#include <iostream>
#include <string>
#include <vector>

#include "dbgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dbgen::run(args, std::cout, std::cerr);
}
