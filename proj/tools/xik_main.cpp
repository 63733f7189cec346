#include <iostream>
#include <string>
#include <vector>

#include "xik/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xik::cli::run(args, std::cout, std::cerr);
}
