// Error types shared by every sexakit module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sexakit {

enum class ErrorKind {
  // input / parse
  MalformedLiteral,
  BadLiteral,
  UnknownUnit,
  CorpusParseError,
  UnknownProcedure,
  UnknownProblem,
  ExpressionSyntax,
  // mathematical preconditions
  ZeroInput,
  NonTerminating,
  IrregularDivisor,
  NotAPerfectSquare,
  NegativeRadicand,
  NoFiniteQuotient,
  ZeroDivisor,
  MalformedProblem,
  DimensionMismatch,
  NonPositiveDimension,
  InconsistentConstraint,
  DuplicateLabel,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by unreadable input (CLI exit status 2); false for
/// violated mathematical preconditions (exit status 3).
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a scribal division needs the reciprocal of a number that is
/// not 2^a 3^b 5^c. `factor()` is the smallest offending prime in decimal,
/// or the remaining cofactor when trial division gives up.
class IrregularDivisorError : public Error {
 public:
  IrregularDivisorError(std::string divisor, std::string factor);

  const std::string& divisor() const noexcept { return divisor_; }
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string divisor_;
  std::string factor_;
};

/// Corpus errors carry a 1-based source position (0 when unknown).
class CorpusError : public Error {
 public:
  CorpusError(ErrorKind kind, std::size_t line, std::size_t column,
              const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sexakit
