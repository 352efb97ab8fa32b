#pragma once

#include <stdexcept>
#include <string>

namespace ed {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor's feasibility precondition failed; the message names the
/// first violated condition.
struct InfeasibleError : Error {
    using Error::Error;
};

/// Malformed input file or unparsable value.
struct ParseError : Error {
    using Error::Error;
};

} // namespace ed
