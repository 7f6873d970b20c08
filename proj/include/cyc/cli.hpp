#pragma once

#include <string>
#include <vector>

namespace cyc {

struct CliResult {
  int status = 0;       // 0 success, 1 verification failure, 2 input error
  std::string output;   // document written to stdout
  std::string error;    // diagnostics written to stderr
};

// The whole command surface, callable in-process. `stdin_data` stands in for
// a piped payload; file payloads go through --in.
CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data = "");

}  // namespace cyc
