#pragma once

#include <stdexcept>
#include <string>

namespace aptorus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Odd dimensions are rejected: only the even-dimensional rotational base
/// flow has the closed form this library is built on; the d = 3 construction
/// is deliberately not implemented.
struct UnsupportedDimensionError : Error {
    using Error::Error;
};

struct InvalidProfileError : Error {
    using Error::Error;
};

/// Requested a derivative order beyond what the field represents exactly.
struct RegularityExceededError : Error {
    using Error::Error;
};

/// Point placement failed within the retry budget. Signals that epsilon is
/// too large for the chosen strategy, not that no layout exists.
struct PackingInfeasibleError : Error {
    using Error::Error;
};

struct EnumerationBudgetError : Error {
    long long candidate_count;
    EnumerationBudgetError(const std::string& msg, long long count)
        : Error(msg), candidate_count(count) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace aptorus
