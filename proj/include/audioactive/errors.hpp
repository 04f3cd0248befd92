#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace audioactive {

// Base of every error raised by the library. Each subclass names the
// contract that was broken so callers (the CLI in particular) can map it to
// an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// evolve() refused to grow a string beyond the configured length limit.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

// The first-digit trajectory of a right-hand part did not close into a cycle
// within the step budget, or its exact prefix window ran dry.
class CycleNotFound : public Error {
 public:
  using Error::Error;
};

class NoClosure : public Error {
 public:
  using Error::Error;
};

class NoCycle : public Error {
 public:
  using Error::Error;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class LongevityCapExceeded : public Error {
 public:
  LongevityCapExceeded(std::string literal, int cap_days)
      : Error("longevity of " + literal + " exceeds " +
              std::to_string(cap_days) + " days"),
        literal_(std::move(literal)),
        cap_days_(cap_days) {}

  const std::string& literal() const noexcept { return literal_; }
  int cap_days() const noexcept { return cap_days_; }

 private:
  std::string literal_;
  int cap_days_;
};

class NonHalting : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace audioactive
