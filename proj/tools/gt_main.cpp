#include <cstdio>
#include <string>
#include <vector>

#include "gt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const gt::CliResult result = gt::run_cli(args);
  if (!result.out.empty()) std::fwrite(result.out.data(), 1, result.out.size(), stdout);
  if (!result.err.empty()) std::fwrite(result.err.data(), 1, result.err.size(), stderr);
  return result.exit_code;
}
