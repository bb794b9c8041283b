#pragma once

#include <stdexcept>
#include <string>

namespace detdisc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different ring contexts (variables or coefficient field differ).
struct RingMismatchError : Error {
    using Error::Error;
};

/// Malformed polynomial or job-file input.
struct ParseError : Error {
    using Error::Error;
};

/// An operation's precondition does not hold (wrong minor size, non-principal
/// ideal, infinite quotient where a finite one is required, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// The configured reduction-step budget was exhausted.  `stage` names the
/// computation that ran away.
struct ResourceError : Error {
    std::string stage;
    explicit ResourceError(const std::string& st, const std::string& msg)
        : Error(msg), stage(st) {}
};

/// Monomial exponent left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace detdisc
