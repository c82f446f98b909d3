#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chaoscrypt {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key file could not be parsed.
class KeyFileError : public Error {
 public:
  using Error::Error;
};

// PGM parsing failed; kind() identifies the malformed class.
class PgmError : public Error {
 public:
  enum class Kind {
    BadMagic,
    BadHeader,
    NotSquare,
    BadMaxval,
    TruncatedRaster,
  };

  PgmError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// The Chen trajectory left the finite domain; step() is the offending
// step index.
class IntegrationError : public Error {
 public:
  IntegrationError(std::size_t step, const std::string& message)
      : Error(message), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// A matrix that should act bijectively on the pixel grid does not
// (det != 1 mod N).
class PermutationError : public Error {
 public:
  using Error::Error;
};

// Wire-protocol failure: malformed frame, refused size, dead peer, or an
// error frame from the server (code() carries the frame's error code).
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& message, std::uint16_t code = 0)
      : Error(message), code_(code) {}
  std::uint16_t code() const noexcept { return code_; }

 private:
  std::uint16_t code_;
};

// The oracle's answers contradict each other: the keystream changed
// between queries or a response was corrupted in transit.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoscrypt
