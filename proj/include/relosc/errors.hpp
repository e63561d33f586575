#pragma once

#include <stdexcept>

namespace relosc {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter or request was rejected before any computation ran.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure started but could not finish to specification.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidScaleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidRequestError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A velocity reached or exceeded the speed of light.
class SuperluminalError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepSizeUnderflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InsufficientSpanError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace relosc
