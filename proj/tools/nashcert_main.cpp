#include <iostream>
#include <string>
#include <vector>

#include "nashcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nashcert::cli::run(args, std::cout, std::cerr);
}
