#include <cstdio>
#include <string>
#include <vector>

#include "klfactor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out;
  int status = klfactor::run_cli(args, out);
  std::fputs(out.c_str(), status == 2 ? stderr : stdout);
  return status;
}
