#pragma once

#include <string>
#include <string_view>

namespace twofa::log {

enum class Level {
    Debug,
    Info,
    Warn,
    Error,
    Off,
};

void set_level(Level level);
Level level();

// Accepts "debug", "info", "warn", "error" or "off"; returns false on
// anything else, leaving the level unchanged.
bool set_level(std::string_view name);

// Messages go to stderr as "[level] message"; writes are serialized.
void debug(const std::string& message);
void info(const std::string& message);
void warn(const std::string& message);
void error(const std::string& message);

}
