#include <iostream>
#include <string>
#include <vector>

#include "torcoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torcoh::cli_run(args, std::cout, std::cerr);
}
