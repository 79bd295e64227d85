#pragma once

#include <stdexcept>
#include <string>

namespace cubespec {

// Errors caused by invalid input or out-of-range parameters. The CLI maps
// these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidGeneratorError : public DomainError {
 public:
  using DomainError::DomainError;
};

class VertexRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DisconnectedError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularSystemError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two independent computation routes produced different results. This
// signals a bug, never bad input; the CLI maps it to exit status 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubespec
