#include <string>
#include <vector>

#include "lpc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lpc::cli::run(args);
}
