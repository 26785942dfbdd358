#pragma once

#include <stdexcept>
#include <string>

namespace nucleon {

// Every error carries a stable machine-readable reason code; the CLI prints
// it verbatim so callers can dispatch on it.
class Error : public std::runtime_error {
public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

private:
  std::string reason_;
};

// Precondition / range violation on an input. CLI exit status 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A numerical guard tripped (aliasing, truncation, non-convergence). CLI exit status 3.
class NumericalError : public Error {
public:
  using Error::Error;
};

[[noreturn]] inline void fail_validation(std::string reason, const std::string& message) {
  throw ValidationError(std::move(reason), message);
}

inline void require(bool condition, const char* reason, const std::string& message) {
  if (!condition) throw ValidationError(reason, message);
}

} // namespace nucleon
