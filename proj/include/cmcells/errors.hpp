#pragma once

#include <stdexcept>
#include <string>

namespace cmcells {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is malformed or outside the allowed domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured bound.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// tau_inverse was given a partition whose core differs from the charge's core.
class WrongCore : public Error {
 public:
  using Error::Error;
};

/// A parameter point with coordinate sum zero cannot be rescaled into Θ₁.
class NotNormalizable : public Error {
 public:
  using Error::Error;
};

/// A shape is not in P_r(n) where one was required.
class InvalidShape : public Error {
 public:
  using Error::Error;
};

/// Two partitions with different hearts were asked for a connecting path.
class NoPath : public Error {
 public:
  using Error::Error;
};

/// An internal precondition or postcondition failed. Always a bug.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the range of the underlying integer type.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace cmcells
