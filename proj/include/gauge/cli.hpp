#pragma once

// Command implementations behind the gauge-integral binary. Each returns
// the process exit code: 0 when a report was produced (including
// NOT-INTEGRABLE outcomes), 2 on configuration errors.

#include <string>

namespace gauge::cli {

struct CommonArgs {
  std::string config_path;  // verify falls back to the builtin manifest
  std::string out_path;
  unsigned long long seed = 0;
  bool quiet = false;
};

int cmd_integrate(const CommonArgs& args);
int cmd_verify(const CommonArgs& args);
int cmd_convergence(const CommonArgs& args);
int cmd_embed(const CommonArgs& args);

}  // namespace gauge::cli
