#ifndef SELFSIM_ERRORS_HPP
#define SELFSIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selfsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "error"; }
};

/// Malformed presentation text. Line and column are 1-based.
class ParseError : public Error {
public:
  enum class Code { syntax, undeclared_generator, degree_out_of_range, duplicate_generator };

  ParseError(Code code, std::size_t line, std::size_t column, const std::string &what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        code_(code), line_(line), column_(column) {}

  Code code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char *kind() const noexcept override { return "parse"; }

private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
};

/// A size cap (points per level, group elements, ...) would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "resource"; }
};

class NotTransitiveError : public Error {
public:
  NotTransitiveError(std::size_t reached, std::size_t expected)
      : Error("action is not transitive: orbit of the base vertex has " + std::to_string(reached) +
              " of " + std::to_string(expected) + " points"),
        reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }
  const char *kind() const noexcept override { return "not-transitive"; }

private:
  std::size_t reached_;
};

/// Internally computed data violates an identity it must satisfy.
class IntegrityError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "integrity"; }
};

class NumericalError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "numerical"; }
};

/// Bad argument supplied by a caller (unknown key, malformed vertex, ...).
class UsageError : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "usage"; }
};

} // namespace selfsim

#endif // SELFSIM_ERRORS_HPP
