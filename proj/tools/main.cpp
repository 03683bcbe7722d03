#include <iostream>
#include <string>
#include <vector>

#include "u3alg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return u3alg::cli::run(args, std::cout, std::cerr);
}
