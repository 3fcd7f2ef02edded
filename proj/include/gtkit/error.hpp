#pragma once

#include <stdexcept>
#include <string>

namespace gtkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible ambient objects (free-group rank,
/// permutation degree, matrix shape, strand count).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class CosetLimitExceeded : public Error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : Error("coset limit exceeded (" + std::to_string(limit) + " cosets)"),
        limit_(limit) {}
  CosetLimitExceeded(std::size_t limit, const std::string& what)
      : Error(what), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class RelatorViolated : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class NotPure : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& id)
      : Error("unknown check: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

}  // namespace gtkit
