#include <iostream>
#include <string>
#include <vector>

#include "unsharp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unsharp::cli::run(args, std::cout, std::cerr);
}
