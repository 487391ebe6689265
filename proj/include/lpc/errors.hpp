#pragma once

#include <stdexcept>
#include <string>

namespace lpc {

// Error taxonomy mirrors the CLI exit codes: config -> 1, capacity -> 2,
// key/mark -> 3, format/corruption -> 4.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct KeyError : std::runtime_error {
    explicit KeyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lpc
