#include <iostream>
#include <string>
#include <vector>

#include "wavekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  wavekit::CommandResult res = wavekit::run_command(args);
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.code;
}
