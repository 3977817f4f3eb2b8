#pragma once

#include <stdexcept>
#include <string>

namespace diversity {

/// Failure category. The CLI maps these onto its exit codes.
enum class ErrorKind {
  Parse = 2,         // malformed input document
  Domain = 3,        // dimension mismatch, size cap exceeded, invalid argument
  Precondition = 4,  // mathematical precondition (not extremal, unbounded slice, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

}  // namespace diversity
