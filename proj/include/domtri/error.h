#pragma once

#include <stdexcept>
#include <string>

namespace domtri {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (PGR files, colorings, traces, sweep configs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural fact that must hold by construction did not. The payload
/// carries a replayable serialization of the offending instance.
class InvariantBreach : public Error {
 public:
  InvariantBreach(const std::string& what, std::string payload = {})
      : Error(what), payload_(std::move(payload)) {}

  const std::string& payload() const noexcept { return payload_; }

 private:
  std::string payload_;
};

/// An exact oracle declined an input beyond its configured limits.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace domtri
