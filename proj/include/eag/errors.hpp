#ifndef EAG_ERRORS_HPP
#define EAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eag {

/// Base class of every error raised by the library. `exit_code()` is the
/// process status the command-line front end reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 3; }
};

/// Malformed user input (bad flags, unparsable files, duplicate points).
class UsageError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

/// Parameters outside the classification domain, e.g. surface genus < 2.
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// A mathematical precondition does not hold (non-generic line, a
/// parameter tuple for which no object of the requested kind exists, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// An enumeration would exceed the configured feasibility cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace eag

#endif  // EAG_ERRORS_HPP
