#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "sgt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgt::run_command(args, std::cout, std::cerr);
}
