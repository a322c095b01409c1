#include <string>
#include <vector>

#include "hpq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hpq::cli::run(args);
}
