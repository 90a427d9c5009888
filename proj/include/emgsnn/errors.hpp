#pragma once

#include <stdexcept>
#include <string>

namespace emgsnn {

// Domain errors thrown by the pipeline. The CLI maps these to exit code 2;
// anything else (usage, bad config) is exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedFile : DomainError {
  using DomainError::DomainError;
};

struct NonFiniteValue : DomainError {
  using DomainError::DomainError;
};

struct UnknownLabel : DomainError {
  using DomainError::DomainError;
};

struct WindowTooLong : DomainError {
  using DomainError::DomainError;
};

struct EmptyClass : DomainError {
  using DomainError::DomainError;
};

struct EmptyDataset : DomainError {
  using DomainError::DomainError;
};

struct ShapeMismatch : DomainError {
  using DomainError::DomainError;
};

struct NonFiniteLoss : DomainError {
  using DomainError::DomainError;
};

struct MissingCoefficient : DomainError {
  using DomainError::DomainError;
};

struct IoError : DomainError {
  using DomainError::DomainError;
};

// Raised when a DEXAT parameter set cannot be realized on the modeled
// hardware (inhibitory weight magnitude outside [1, 255]).
struct OutOfHardwareRange : DomainError {
  OutOfHardwareRange(std::string which_, double value_)
      : DomainError("parameter " + which_ + " = " + std::to_string(value_) +
                    " outside hardware range [1, 255]"),
        which(std::move(which_)),
        value(value_) {}
  std::string which;
  double value;
};

struct InvalidDecay : DomainError {
  using DomainError::DomainError;
};

}  // namespace emgsnn
