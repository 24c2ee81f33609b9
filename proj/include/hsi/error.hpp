#pragma once

#include <stdexcept>
#include <string>

namespace hsi {

/// Malformed arguments: negative exponents, arity mismatch, non-permutations.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed arguments outside an operation's domain (zero ideal, unit ideal, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematical invariant failed to hold; indicates a bug, not bad input.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hsi
