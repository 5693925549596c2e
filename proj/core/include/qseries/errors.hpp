#ifndef QSERIES_ERRORS_HPP
#define QSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qseries {

// Base of every error raised by the library. Each subclass names one
// failure condition so callers can catch selectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series or product failed to decay within the truncation policy, or |q| >= 1.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

// A denominator factor came within pole_margin of zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class OrderExceeded : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

class MaxPanelsExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries

#endif  // QSERIES_ERRORS_HPP
