#pragma once

#include <stdexcept>
#include <string>

namespace zforce {

/// A generator or construction was called outside its parameter domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph would exceed kMaxOrder, or exhaustive work would exceed the cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int required)
      : std::runtime_error(what), required_(required) {}
  /// The order (or cap) that would have been needed.
  int required() const { return required_; }

 private:
  int required_;
};

/// Malformed text input. line() is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Inputs that are individually valid but do not fit together
/// (e.g. a certificate whose witness does not belong to the graph).
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zforce
