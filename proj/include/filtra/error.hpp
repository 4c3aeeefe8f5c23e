#pragma once

#include <stdexcept>
#include <string>

namespace filtra {

/// Malformed or out-of-range input: bad ground size, points outside the
/// ground set, families that are not topologies, mismatched grounds.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for otherwise
/// well-formed input (e.g. slight families over a non-weak filtration).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace filtra
