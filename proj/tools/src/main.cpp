#include <iostream>
#include <string>
#include <vector>

#include "ramsey_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramsey::cli::dispatch(args, std::cout, std::cerr);
}
