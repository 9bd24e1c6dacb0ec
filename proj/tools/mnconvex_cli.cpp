#include <iostream>
#include <string>
#include <vector>

#include "mnconvex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mnconvex::cli::run(args, std::cout, std::cerr);
}
