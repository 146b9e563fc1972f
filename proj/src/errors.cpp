#include "sexakit/errors.hpp"

#include <utility>

namespace sexakit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLiteral: return "MalformedLiteral";
    case ErrorKind::BadLiteral: return "BadLiteral";
    case ErrorKind::UnknownUnit: return "UnknownUnit";
    case ErrorKind::CorpusParseError: return "CorpusParseError";
    case ErrorKind::UnknownProcedure: return "UnknownProcedure";
    case ErrorKind::UnknownProblem: return "UnknownProblem";
    case ErrorKind::ExpressionSyntax: return "ExpressionSyntax";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::IrregularDivisor: return "IrregularDivisor";
    case ErrorKind::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::NoFiniteQuotient: return "NoFiniteQuotient";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::MalformedProblem: return "MalformedProblem";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorKind::InconsistentConstraint: return "InconsistentConstraint";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLiteral:
    case ErrorKind::BadLiteral:
    case ErrorKind::UnknownUnit:
    case ErrorKind::CorpusParseError:
    case ErrorKind::UnknownProcedure:
    case ErrorKind::UnknownProblem:
    case ErrorKind::ExpressionSyntax:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

IrregularDivisorError::IrregularDivisorError(std::string divisor,
                                             std::string factor)
    : Error(ErrorKind::IrregularDivisor,
            divisor + " has no finite reciprocal (factor " + factor + ")"),
      divisor_(std::move(divisor)),
      factor_(std::move(factor)) {}

CorpusError::CorpusError(ErrorKind kind, std::size_t line, std::size_t column,
                         const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace sexakit
