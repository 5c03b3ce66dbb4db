#include <iostream>
#include <string>
#include <vector>

#include "spliceidx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spliceidx::cli::run(args, std::cout, std::cerr);
}
