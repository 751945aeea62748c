#pragma once

#include <stdexcept>
#include <string>

namespace efoc {

/// Base of every error raised by the library. `name()` is the stable
/// identifier the CLI prints on standard error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

/// A sequence value n_psi vanished (or q^n = 1) at a queried index.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(int index, const std::string& what)
      : Error(what), index_(index) {}
  const char* name() const noexcept override { return "AdmissibilityError"; }
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "DomainError"; }
};

/// An exhaustive enumeration would exceed its configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "BudgetError"; }
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "NotInvertibleError"; }
};

/// An operator series is applied beyond the order to which it is known.
class TruncationError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "TruncationError"; }
};

/// A computed object failed its defining identities.
class InvariantError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "InvariantError"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "ParseError"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "IoError"; }
};

}  // namespace efoc
