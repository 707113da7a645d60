#ifndef POLARZEROS_ERRORS_HPP
#define POLARZEROS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarzeros {

/// Precondition violated by the caller (bad degree, |beta| >= 1, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A (measure, k) pair for which no closed form is implemented.
class UnsupportedVariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation that should be exact in exact arithmetic left a remainder
/// above tolerance, or an iteration failed to converge.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw InvalidArgument(message);
}

} // namespace detail
} // namespace polarzeros

#endif
