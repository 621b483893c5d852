#pragma once

#include <stdexcept>
#include <string>

namespace hopfgreen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Requested construction only exists in another case of the parameter
/// classification (e.g. non-nilpotent modules with |chi| infinite).
class UnsupportedCase : public Error {
 public:
  explicit UnsupportedCase(const std::string& msg) : Error(msg) {}
};

class InvalidRep : public Error {
 public:
  explicit InvalidRep(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Signals a bug in the library itself, never bad user input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

/// The candidate eigenvalue pool did not account for the full invertible
/// part; names the weight slice and the unexplained dimension.
class IncompleteEigenPool : public Error {
 public:
  IncompleteEigenPool(const std::string& slice, long missing)
      : Error("incomplete eigenvalue pool on slice " + slice + ": " +
              std::to_string(missing) + " dimensions unaccounted for"),
        slice_(slice),
        missing_(missing) {}
  const std::string& slice() const { return slice_; }
  long missing() const { return missing_; }

 private:
  std::string slice_;
  long missing_;
};

}  // namespace hopfgreen
