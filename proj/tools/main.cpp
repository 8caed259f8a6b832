#include <iostream>
#include <string>
#include <vector>

#include "anglespread/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return anglespread::cli::run(args, std::cout, std::cerr);
}
