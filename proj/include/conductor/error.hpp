#pragma once

#include <stdexcept>
#include <string>

namespace conductor {

// Base of every error raised by the library. Each subclass maps to one CLI
// exit code (see tools/conductor_cli.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad group table, m < n, gcd(k,m) != 1, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A pivot valuation could not be certified at the working p-adic precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported stratum (non-catalog representation, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Size bound exceeded (character tables of very large groups).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace conductor
