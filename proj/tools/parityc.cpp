#include <iostream>
#include <string>
#include <vector>

#include <parityc/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parityc::cli_run(std::move(args), std::cout);
}
