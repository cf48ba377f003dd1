#include <iostream>
#include <string>
#include <vector>

#include "xbow/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return xbow::cli_main(args, std::cout, std::cerr);
}
