#include <iostream>
#include <string>
#include <vector>

#include "persist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = persist::cli::run(args);
  std::cout << result.payload;
  return result.exit_code;
}
