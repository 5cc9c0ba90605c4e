#include <iostream>
#include <string>
#include <vector>

#include "quotpt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = quotpt::cli::run(args, quotpt::cli::env_format());
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
