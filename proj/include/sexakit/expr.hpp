// Infix arithmetic over sexagesimal literals: + - * / and parentheses
// ('x', U+00D7 and U+00F7 are accepted for * and /). Division follows the
// scribal contract unless asked otherwise.

#pragma once

#include "sexakit/sexa.hpp"

#include <string_view>

namespace sexakit {

enum class DivisionMode {
  Scribal,    // a / b = a * igi(b); b must be regular
  Recognize,  // quotient found by inspection; it must terminate
  Oracle,     // unrestricted exact rational division
};

/// Throws ExpressionSyntax or MalformedLiteral for unreadable input, and the
/// arithmetic errors of the chosen division mode.
Sexa evaluate(std::string_view expression, DivisionMode mode = DivisionMode::Scribal);

}  // namespace sexakit
