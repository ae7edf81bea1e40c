#include "pats/log.hpp"

#include <cstdlib>
#include <iostream>

namespace pats::log {

namespace {

Level parse_env() {
    const char* raw = std::getenv("PATS_LOG");
    if (raw == nullptr) return Level::warn;
    const std::string value(raw);
    if (value == "quiet") return Level::quiet;
    if (value == "warn") return Level::warn;
    if (value == "info") return Level::info;
    if (value == "debug") return Level::debug;
    return Level::warn;
}

}  // namespace

Level level() {
    static const Level lvl = parse_env();
    return lvl;
}

void warn(const std::string& msg) {
    if (level() >= Level::warn) std::cerr << "warning: " << msg << "\n";
}

void info(const std::string& msg) {
    if (level() >= Level::info) std::cerr << "info: " << msg << "\n";
}

void debug(const std::string& msg) {
    if (level() >= Level::debug) std::cerr << "debug: " << msg << "\n";
}

}  // namespace pats::log
