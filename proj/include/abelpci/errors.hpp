#pragma once

#include <stdexcept>
#include <string>

namespace abelpci {

// Caller supplied something outside an operation's domain (bad spec text,
// out-of-range generator, mismatched groups, cap exceeded).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed: a structural invariant that the
// algorithms guarantee did not hold on a concrete value.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A cross-check between two independent computations disagreed.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace abelpci
