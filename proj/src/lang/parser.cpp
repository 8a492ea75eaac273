#include "clifford/lang/parser.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace clifford::lang {

namespace {

struct FunctionInfo {
  std::string_view name;
  Arity arity;
};

constexpr std::array<FunctionInfo, 13> kFunctions{{
    {"grade", {2, 2}},
    {"dual", {1, 2}},
    {"inv", {1, 1}},
    {"mag", {1, 1}},
    {"nsq", {1, 1}},
    {"rev", {1, 1}},
    {"cross", {2, 2}},
    {"rot", {4, 4}},
    {"rotto", {3, 3}},
    {"versor", {2, -1}},
    {"coeff", {2, 2}},
    {"curvature", {1, 1}},
    {"sqrt", {1, 1}},
}};

const std::string kOperandStart = "number, basis blade, identifier, '(', '-' or '~'";

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Ast expression() { return sum(); }

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  bool at_op(std::string_view op) const {
    return peek().kind == TokenKind::op && peek().text == op;
  }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1)
      ++pos_;
    return t;
  }

  Token expect_op(std::string_view op) {
    if (!at_op(op))
      fail("'" + std::string(op) + "'");
    return take();
  }

  void expect_end() {
    if (peek().kind != TokenKind::end)
      fail("an operator or end of input");
  }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &t = peek();
    Span span = t.span;
    if (span.end == span.begin)
      span.end = span.begin + 1;
    throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + describe(t), span);
  }

private:
  static Ast binary(std::string op, Ast lhs, Ast rhs) {
    Ast node;
    node.kind = Ast::Kind::binary;
    node.text = std::move(op);
    node.span = {lhs.span.begin, rhs.span.end};
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  Ast sum() {
    Ast lhs = product();
    while (at_op("+") || at_op("-")) {
      std::string op = take().text;
      lhs = binary(op, std::move(lhs), product());
    }
    return lhs;
  }

  // '*', '/' and juxtaposition with a following basis symbol.
  Ast product() {
    Ast lhs = inner();
    while (true) {
      if (at_op("*") || at_op("/")) {
        std::string op = take().text;
        lhs = binary(op, std::move(lhs), inner());
      } else if (peek().kind == TokenKind::basis) {
        lhs = binary("*", std::move(lhs), inner());
      } else {
        return lhs;
      }
    }
  }

  Ast inner() {
    Ast lhs = outer();
    while (at_op("|")) {
      take();
      lhs = binary("|", std::move(lhs), outer());
    }
    return lhs;
  }

  Ast outer() {
    Ast lhs = unary();
    if (at_op("^")) {
      take();
      return binary("^", std::move(lhs), outer());
    }
    return lhs;
  }

  Ast unary() {
    if (at_op("-") || at_op("~")) {
      Token op = take();
      Ast child = unary();
      Ast node;
      node.kind = Ast::Kind::unary;
      node.text = op.text;
      node.span = {op.span.begin, child.span.end};
      node.children.push_back(std::move(child));
      return node;
    }
    return primary();
  }

  Ast primary() {
    const Token &t = peek();
    Ast node;
    node.span = t.span;
    switch (t.kind) {
    case TokenKind::number:
      node.kind = Ast::Kind::number;
      node.text = take().text;
      return node;
    case TokenKind::basis:
      node.kind = Ast::Kind::basis;
      node.text = t.text;
      node.indices = take().indices;
      return node;
    case TokenKind::identifier:
      return identifier();
    case TokenKind::op:
      if (t.text == "(") {
        take();
        Ast e = sum();
        expect_op(")");
        return e;
      }
      break;
    case TokenKind::end:
      break;
    }
    fail(kOperandStart);
  }

  Ast identifier() {
    Token name = take();
    Ast node;
    node.span = name.span;
    node.text = name.text;
    if (name.text == "let")
      throw Error(ErrorKind::ParseError, "'let' is only valid at the start of a statement",
                  name.span);
    Arity arity{};
    if (lookup_function(name.text, arity)) {
      if (!at_op("("))
        fail("'(' after function name '" + name.text + "'");
      take();
      node.kind = Ast::Kind::call;
      if (!at_op(")")) {
        node.children.push_back(sum());
        while (at_op(",")) {
          take();
          node.children.push_back(sum());
        }
      }
      Token close = expect_op(")");
      node.span.end = close.span.end;
      int n = static_cast<int>(node.children.size());
      if (n < arity.min || (arity.max >= 0 && n > arity.max)) {
        std::string want = std::to_string(arity.min);
        if (arity.max < 0)
          want = "at least " + want;
        else if (arity.max != arity.min)
          want += " or " + std::to_string(arity.max);
        throw Error(ErrorKind::ParseError,
                    name.text + " takes " + want + " argument(s), got " + std::to_string(n),
                    node.span);
      }
      return node;
    }
    node.kind = name.text == "pi" ? Ast::Kind::pi : Ast::Kind::variable;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_reserved(std::string_view name) {
  Arity a{};
  return name == "let" || name == "pi" || lookup_function(name, a);
}

} // namespace

bool lookup_function(std::string_view name, Arity &out) {
  for (const auto &f : kFunctions)
    if (f.name == name) {
      out = f.arity;
      return true;
    }
  return false;
}

Ast parse_expression(std::string_view source) {
  Parser p(tokenize(source));
  Ast e = p.expression();
  p.expect_end();
  return e;
}

Statement parse_statement(std::string_view source) {
  Statement st;
  std::size_t first = 0;
  while (first < source.size() && std::isspace(static_cast<unsigned char>(source[first])))
    ++first;
  std::size_t last = source.size();
  while (last > first && std::isspace(static_cast<unsigned char>(source[last - 1])))
    --last;
  st.span = {first, last};

  if (first < last && source[first] == ':') {
    st.kind = Statement::Kind::directive;
    std::size_t i = first + 1;
    while (i < last && !std::isspace(static_cast<unsigned char>(source[i])))
      ++i;
    st.name = std::string(source.substr(first + 1, i - first - 1));
    while (i < last && std::isspace(static_cast<unsigned char>(source[i])))
      ++i;
    st.argument = std::string(source.substr(i, last - i));
    st.argument_span = {i, last};
    if (st.name.empty())
      throw Error(ErrorKind::ParseError, "expected a directive name after ':'",
                  Span{first, first + 1});
    return st;
  }

  Parser p(tokenize(source));
  if (p.peek().kind == TokenKind::identifier && p.peek().text == "let") {
    p.take();
    if (p.peek().kind != TokenKind::identifier)
      p.fail("a variable name");
    Token name = p.take();
    if (is_reserved(name.text))
      throw Error(ErrorKind::ParseError, "'" + name.text + "' is a reserved name", name.span);
    p.expect_op("=");
    st.kind = Statement::Kind::let;
    st.name = name.text;
    st.argument_span = name.span;
  }
  if (p.peek().kind == TokenKind::end)
    p.fail(kOperandStart);
  st.expr = p.expression();
  p.expect_end();
  return st;
}

std::string to_sexpr(const Ast &ast) {
  switch (ast.kind) {
  case Ast::Kind::number:
  case Ast::Kind::basis:
  case Ast::Kind::variable:
    return ast.text;
  case Ast::Kind::pi:
    return "pi";
  case Ast::Kind::unary:
  case Ast::Kind::binary:
  case Ast::Kind::call: {
    std::string out = "(" + ast.text;
    for (const Ast &c : ast.children)
      out += " " + to_sexpr(c);
    return out + ")";
  }
  }
  return {};
}

} // namespace clifford::lang
