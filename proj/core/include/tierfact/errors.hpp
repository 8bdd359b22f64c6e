#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tierfact {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad QID, invalid plan, precondition violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Bad or inconsistent run configuration. CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A stage was invoked before its upstream artifact exists. CLI exit code 3.
class DependencyError : public Error {
 public:
  using Error::Error;
};

/// HTTP-level failure that survived the retry policy. Carries one log line
/// per attempt. CLI exit code 4.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, std::vector<std::string> attempts)
      : Error(message), attempts_(std::move(attempts)) {}
  explicit TransportError(const std::string& message) : Error(message) {}

  const std::vector<std::string>& attempts() const { return attempts_; }

 private:
  std::vector<std::string> attempts_;
};

/// Replay mode was asked for a request that is not in the cache.
class CacheMissError : public TransportError {
 public:
  using TransportError::TransportError;
};

/// Requested entity/page does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Endpoint answered with a non-retryable error status.
class EndpointError : public Error {
 public:
  using Error::Error;
};

/// Endpoint answered 2xx but the payload violates the wire contract.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// Dataset directory is structurally broken (missing member, bad manifest).
class DatasetError : public Error {
 public:
  using Error::Error;
};

/// Correlation is undefined for the given inputs (constant vector).
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tierfact
