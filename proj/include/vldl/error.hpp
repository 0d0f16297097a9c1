#pragma once

#include <stdexcept>
#include <string>

namespace vldl {

// Malformed user input: unknown ids, syntax errors, schema violations.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A construction that the library deliberately does not support.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vldl
