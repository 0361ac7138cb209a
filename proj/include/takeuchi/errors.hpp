#pragma once

#include <stdexcept>
#include <string>

namespace takeuchi {

/// Input outside the mathematical domain of an operation (x < 0 for W, λ = 0 where
/// division by λ is required, duplicate interpolation nodes, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured work or memory budget was exhausted before an answer was known.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An overdetermined exact fit found data that contradicts the assumed structure.
/// The message is the finding and is reported verbatim.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical noise floor is above the requested accuracy.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table or series is too short for the requested computation.
class DepthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace takeuchi
