#pragma once

#include <stdexcept>
#include <string>

namespace torsion {

// Bad user input: malformed documents, out-of-domain arguments, failed validation.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The exact scalar domain cannot represent the requested value (nested radicals).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conversion to double left the representable range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A condition the preconditions should have excluded, e.g. a singular change of basis.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Float path: the assembled change-of-basis matrix is numerically singular.
class DegenerateBasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace torsion
