#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace ambicard::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the built CLI with `args` (shell syntax), capturing stdout only.
inline CliResult run_cli(const std::string& args) {
  const std::string command = std::string(AMBICARD_CLI) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace ambicard::testing
