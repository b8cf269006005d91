#pragma once

#include <stdexcept>
#include <string>

namespace dynmono {

// Bad arguments or malformed structures handed to an operation.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A threshold exceeds the instance bound on a code path that requires tau <= t.
class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration refused to run because it would exceed its size or step guard.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dynmono
