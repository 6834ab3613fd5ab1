#include <iostream>
#include <string>
#include <vector>

#include "divpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divpoly::run(args, std::cout, std::cerr);
}
