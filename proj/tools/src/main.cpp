#include "medkit/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const auto outcome = medkit::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
