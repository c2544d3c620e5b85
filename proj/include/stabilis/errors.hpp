#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabilis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when an input falls outside the degree box an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& msg, std::string pointer)
      : Error(msg + " at " + pointer), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Two independent decision routes disagreed. Always a bug signal.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace stabilis
