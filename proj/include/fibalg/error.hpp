#pragma once

#include <stdexcept>
#include <string>

namespace fibalg {

/// Raised when arguments fall outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a decision procedure runs out of its work budget.
/// Callers must treat this as "unknown", never as a negative answer.
class Undecided : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fibalg
