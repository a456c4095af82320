#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lab/config.hpp"

namespace repeller::lab {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2 };

struct RunOptions {
  std::filesystem::path out = ".";
  unsigned jobs = 1;
  bool cache = true;
  std::filesystem::path cache_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;
};

CommandResult cmd_dim(const Config& cfg, const RunOptions& opts);
CommandResult cmd_bounds(const Config& cfg, const RunOptions& opts);
CommandResult cmd_a2(const Config& cfg, const RunOptions& opts);
CommandResult cmd_induced(const Config& cfg, const RunOptions& opts);

const std::vector<std::string>& command_names();

/// Applies the seed override, consults the cache, runs the command and maps
/// configuration errors to exit code 2. `sweep-all` runs every applicable
/// command into a subdirectory of opts.out.
int run_command(const std::string& name, Config cfg, const RunOptions& opts);

/// Hash of the fully resolved config, echoed into every output.
std::string config_hash(const Config& cfg);

}  // namespace repeller::lab
