#pragma once

#include <stdexcept>
#include <string>

namespace fibquiver {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNeighbors : public Error {
 public:
  using Error::Error;
};

class RadiusTooLarge : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  OracleCapExceeded(int requested, int cap)
      : Error("requested step " + std::to_string(requested) + " exceeds the oracle cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace fibquiver
