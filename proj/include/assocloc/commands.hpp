#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "assocloc/localization.hpp"
#include "assocloc/report.hpp"

namespace assocloc {

struct CommandOptions {
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultCap;
};

const std::vector<std::string>& command_names();
bool is_known_command(std::string_view name);

// paths[0] is the algebra file, the rest are module files over it. Never
// throws for input problems: they end up in Report::error() with exit 2.
Report run_command(const std::string& command, const std::vector<std::string>& paths,
                   const CommandOptions& opts);

}  // namespace assocloc
