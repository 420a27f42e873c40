#include <iostream>

#include "sheet_atlas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sheet_atlas::run(args, std::cout, std::cerr);
}
