#pragma once

#include "clifford/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clifford::lang {

enum class TokenKind {
  number,     // 3, 3.25, 1.5e-3 (no exponent without a fraction part)
  basis,      // e1, e123, e{10,3}
  identifier, // let, pi, grade, x1, ...
  op,         // + - * / | ^ ~ ( ) , =
  end,
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  // Generator indices in written order, for basis tokens.
  std::vector<unsigned> indices;
  Span span;
};

// Throws LexError with the offending span.
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token &t);

} // namespace clifford::lang
