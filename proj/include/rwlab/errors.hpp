#pragma once

#include <stdexcept>
#include <string>

namespace rwlab {

/// Malformed input, violated precondition, or arithmetic overflow.
/// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard or enumeration cap was hit. The CLI maps this to exit
/// code 3; set RWLAB_GUARD_OVERRIDE=1 to lift the CLI-level guards.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rwlab
