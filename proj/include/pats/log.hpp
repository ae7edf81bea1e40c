#pragma once

#include <string>

namespace pats::log {

enum class Level { quiet = 0, warn = 1, info = 2, debug = 3 };

// Current verbosity, read once from the PATS_LOG environment variable
// (quiet|warn|info|debug, default warn).
Level level();

void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace pats::log
