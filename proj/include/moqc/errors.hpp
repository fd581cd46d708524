#pragma once

#include <stdexcept>
#include <string>

namespace moqc {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. Carries the 1-based line number when known (0 otherwise).
struct parse_error : error {
    std::string path;
    long line;
    parse_error(std::string p, long ln, const std::string& msg)
        : error(p + (ln > 0 ? ":" + std::to_string(ln) : "") + ": " + msg),
          path(std::move(p)), line(ln) {}
};

// Precondition violated by the caller (bad arguments, unusable graph, ...).
struct invalid_input : error {
    using error::error;
};

// Problem has no feasible solution under the stated preconditions.
struct infeasible_error : error {
    using error::error;
};

// Cooperative time limit exceeded.
struct timeout_error : error {
    timeout_error() : error("time limit exceeded") {}
};

// An internal invariant failed; indicates a bug, not a user error.
struct internal_error : error {
    using error::error;
};

} // namespace moqc
