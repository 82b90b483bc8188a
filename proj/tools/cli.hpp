#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace chaindepth::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kCap = 3,
  /// A reproduction run had a failing criterion, or an unexpected error.
  kFailed = 4,
};

enum class Format { Text, Json, Dot };

struct CliConfig {
  std::size_t max_group_order = 2500;
  std::size_t max_subgroups = 100'000;
  std::uint64_t factor_budget = 1u << 22;
  unsigned jobs = 1;
  Format format = Format::Text;
};

/// DEPTH_MAX_ORDER, DEPTH_MAX_SUBGROUPS, DEPTH_FACTOR_BUDGET, DEPTH_JOBS and
/// DEPTH_FORMAT applied over the defaults. Throws std::invalid_argument.
CliConfig config_from_env(const std::map<std::string, std::string>& env);
std::map<std::string, std::string> process_env();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env = {});

}  // namespace chaindepth::cli
