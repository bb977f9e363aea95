#include <iostream>
#include <string>
#include <vector>

#include "postlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return postlie::cli::runCommand(args, std::cout, std::cerr);
}
