#include <iostream>
#include <string>
#include <vector>

#include "fibquiver/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fibquiver::cli::run(args, std::cout, std::cerr);
}
