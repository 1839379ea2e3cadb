#include <iostream>
#include <string>
#include <vector>

#include "pfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  auto result = pfree::cli::run_args(args, std::cin);
  std::cout << result.output;
  if (result.exit_code == 2) std::cerr << "pfree: rejected input, see the \"error\" field\n";
  return result.exit_code;
}
