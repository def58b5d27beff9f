#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulertop {

// Base class for all library errors. The CLI maps ConfigError to exit code 2
// and everything else derived from Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

class NotLmgError : public Error {
 public:
  using Error::Error;
};

class DegenerateAxisError : public Error {
 public:
  using Error::Error;
};

class InvalidGaugeError : public Error {
 public:
  using Error::Error;
};

class InvalidPointError : public Error {
 public:
  using Error::Error;
};

class NoBistabilityError : public Error {
 public:
  using Error::Error;
};

class UndefinedProtocolError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised when a fixed-step integration produces a non-finite state.
// last_valid_index is the index of the last finite sample.
class IntegrationDivergedError : public Error {
 public:
  IntegrationDivergedError(const std::string& what, std::size_t last_valid)
      : Error(what), last_valid_index(last_valid) {}
  std::size_t last_valid_index;
};

}  // namespace eulertop
