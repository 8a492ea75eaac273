#pragma once

#include "clifford/lang/lexer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clifford::lang {

struct Ast {
  enum class Kind {
    number,   // text holds the literal
    basis,    // indices in written order
    variable, // text holds the name
    pi,
    unary,    // text is "-" or "~", one child
    binary,   // text is "+", "-", "*", "/", "|" or "^", two children
    call,     // text is the function name
  };

  Kind kind = Kind::number;
  std::string text;
  std::vector<unsigned> indices;
  std::vector<Ast> children;
  Span span;
};

struct Statement {
  enum class Kind { expression, let, directive };

  Kind kind = Kind::expression;
  // Bound name for let, directive name (without ':') for directives.
  std::string name;
  // Directive argument, possibly empty.
  std::string argument;
  Span argument_span;
  Ast expr;
  Span span;
};

// Throws LexError or ParseError; the message lists the expected tokens.
Ast parse_expression(std::string_view source);
Statement parse_statement(std::string_view source);

// Fully parenthesized prefix form, e.g. "(| (^ e1 e2) e3)".
std::string to_sexpr(const Ast &ast);

// Arity bounds of the built-in functions; max < 0 means unbounded.
struct Arity {
  int min;
  int max;
};
bool lookup_function(std::string_view name, Arity &out);

} // namespace clifford::lang
