#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "rwlab/errors.hpp"

namespace rwlab {

inline constexpr const char* kToolName = "rwlab";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// Exit codes shared by the CLI and the pipeline layer.
inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertionFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceGuard = 3;

/// Checked 64-bit addition; weights and targets must never wrap around.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw InputError("64-bit overflow in weight arithmetic: " + std::to_string(a) + " + " +
                         std::to_string(b));
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw InputError("64-bit overflow in weight arithmetic: " + std::to_string(a) + " * " +
                         std::to_string(b));
    return r;
}

/// RWLAB_GUARD_OVERRIDE=1 lifts the CLI-level size guards (documented time
/// warning: exhaustive enumerations beyond the guards can run for hours).
inline bool guard_override() {
    const char* v = std::getenv("RWLAB_GUARD_OVERRIDE");
    return v != nullptr && std::string(v) == "1";
}

} // namespace rwlab
