#ifndef DEPTH2_ERRORS_HPP
#define DEPTH2_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace depth2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size bound (atoms, worlds, search space) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An element, world or index lies outside its ambient structure.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied to a structure that does not meet its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded sublattice whose upsets do not all have a least member.
class NoClosureError : public Error {
 public:
  NoClosureError(const std::string& what, std::uint32_t offending)
      : Error(what), offending_(offending) {}
  std::uint32_t offending() const noexcept { return offending_; }

 private:
  std::uint32_t offending_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Formula text could not be tokenized or parsed. Column is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t column, std::vector<std::string> expected)
      : Error(what), column_(column), expected_(std::move(expected)) {}
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A formula mentions a variable the valuation does not assign.
class BindingError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search would exceed the evaluation budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace depth2

#endif  // DEPTH2_ERRORS_HPP
