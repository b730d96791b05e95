#include "cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = hbraid::cli::run(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_status;
}
