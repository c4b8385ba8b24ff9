#include <iostream>
#include <string>
#include <vector>

#include "logcrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logcrit::run_command(args, std::cout, std::cerr);
}
