#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_max_n;
  if (const char* v = std::getenv("EXPCONG_MAX_N")) env_max_n = v;
  return expcong::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env_max_n);
}
