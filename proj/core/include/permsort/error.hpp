#pragma once

#include <stdexcept>
#include <string>

namespace permsort {

// Failure categories. The numeric values double as the CLI exit codes.
enum class ErrorKind : int {
  kParse = 1,
  kContract = 2,
  kInfeasible = 3,
  kSizeGuard = 4,
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
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorKind::kContract, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorKind::kInfeasible, what) {}
};

class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what)
      : Error(ErrorKind::kSizeGuard, what) {}
};

}  // namespace permsort
