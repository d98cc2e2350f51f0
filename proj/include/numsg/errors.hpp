#ifndef NUMSG_ERRORS_HPP
#define NUMSG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsg {

// Every quantity in the library (set elements, Apery elements, vector
// entries) is a signed 64-bit integer.
using Int = std::int64_t;

// Largest conductor or modulus we are willing to materialize element by
// element. Position vectors themselves are never limited by this.
inline constexpr Int kMaterializationLimit = Int{1} << 24;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range entries, duplicate values, wrong lengths.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Input is well formed but an operation's precondition does not hold,
/// e.g. asking for Ap(I, n) when I is not closed under adding n.
class PreconditionError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// 64-bit arithmetic would wrap.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A size guard refused to materialize or enumerate something too large.
class GuardError : public Error {
public:
  using Error::Error;
};

}  // namespace numsg

#endif  // NUMSG_ERRORS_HPP
