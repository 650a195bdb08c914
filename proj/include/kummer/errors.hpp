#ifndef KUMMER_ERRORS_HPP
#define KUMMER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kummer {

/// Malformed or out-of-domain input (wrong degree, non-integral coefficient, even prime...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would exceed its configured size limit.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// The mathematical hypotheses an operation relies on do not hold for its arguments.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// An operation failed to produce a result its preconditions guarantee.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kummer

#endif
