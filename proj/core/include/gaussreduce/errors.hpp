#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace gaussreduce {

// base class for all toolkit errors
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed or inconsistent input (dimension mismatch, non-finite entries,
// constraint violations detected up front)
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// input is singular or too close to singular for the requested factorization
class SingularInputError : public Error {
 public:
  using Error::Error;
};

// an iterative or spectral step failed to reach its residual target;
// carries the residual that was actually achieved
class NumericalFailureError : public Error {
 public:
  NumericalFailureError(const std::string& msg, double achieved)
      : Error(msg + " (achieved residual " + format_residual(achieved) + ")"),
        achieved_residual(achieved) {}
  double achieved_residual;

 private:
  static std::string format_residual(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
  }
};

// structurally valid input that the operation does not handle
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussreduce
