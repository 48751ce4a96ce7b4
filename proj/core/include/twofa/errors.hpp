#pragma once

#include <stdexcept>
#include <string>

namespace twofa {

/// Bad or missing configuration input (pattern file, dictionary, seed file,
/// config file). Raised at startup, never mid-run; the CLI maps it to exit
/// code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twofa
