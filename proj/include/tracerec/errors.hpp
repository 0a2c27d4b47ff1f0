#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracerec {

/// Invalid code/channel parameter combination. The message names the
/// constraint that failed.
struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed bit-sequence text. `position` is the 1-based offset of the
/// offending character.
struct FormatError : std::runtime_error {
    std::size_t position;
    FormatError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

/// A run-length-limited constraint was violated. `run_start` is the 0-based
/// index where the offending run begins.
struct RllViolation : std::runtime_error {
    std::size_t run_start;
    std::size_t run_length;
    RllViolation(const std::string& msg, std::size_t start, std::size_t length)
        : std::runtime_error(msg), run_start(start), run_length(length) {}
};

/// Rejection sampling hit its retry limit.
struct SamplerExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside a function's mathematical domain.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad experiment configuration (unknown key, unparsable value, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tracerec
