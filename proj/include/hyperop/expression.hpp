#pragma once

#include <string>
#include <string_view>

#include "hyperop/word.hpp"

namespace hyperop {

struct OperatorExpression {
  std::string source;
  OperatorWord word;
};

/// Grammar, loosest to tightest:
///   sum   := comp (('+' | '/\') comp)*        left associative
///   comp  := power ('.' power)*               composition, f.g = f∘g
///   power := primary ('^' INT)*               INT >= 1, base of arity 1
///   primary := Delta | delta | gamma | Ext | Int | Nbd | NbdInv
///            | alpha | beta | id | Zero | '(' sum ')'
/// Aliases expand on parse: Ext = Delta.gamma.delta.gamma,
/// Int = delta.gamma.Delta.gamma, alpha = Delta.gamma, beta = delta.gamma.
/// Throws ParseError with a 0-based character offset.
OperatorExpression parseExpression(std::string_view text);

}  // namespace hyperop
