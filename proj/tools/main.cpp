#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_data;
  if (!isatty(fileno(stdin))) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    stdin_data = ss.str();
  }
  cyc::CliResult r = cyc::run_cli(args, stdin_data);
  std::cout << r.output;
  std::cerr << r.error;
  return r.status;
}
