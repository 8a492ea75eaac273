#include "clifford/lang/session.hpp"

#include "clifford/calculus/field.hpp"
#include "clifford/geometry.hpp"
#include "clifford/lang/format.hpp"
#include "clifford/serialize.hpp"

#include <cctype>
#include <charconv>
#include <numbers>

namespace clifford::lang {

namespace {

using calculus::Expr;

[[noreturn]] void fail(ErrorKind kind, const std::string &msg, Span span) {
  throw Error(kind, msg, span);
}

// Scalars are the same element under every signature; retag them so
// literals combine with values stored under an earlier :sig.
Multivector retag(const Multivector &a, Signature sig) {
  Multivector out(sig, a.mode());
  for (const auto &[b, c] : a.terms())
    out.accumulate(b, c);
  return out;
}

void align(Multivector &a, Multivector &b) {
  if (a.signature() == b.signature())
    return;
  if (a.is_scalar() || a.is_zero())
    a = retag(a, b.signature());
  else if (b.is_scalar() || b.is_zero())
    b = retag(b, a.signature());
}

class Evaluator {
public:
  explicit Evaluator(const Session &s) : session_(s) {}

  Value value(const Ast &node) const {
    try {
      if (node.kind == Ast::Kind::call && node.text == "curvature") {
        Expr f = symbolic(node.children[0]);
        return calculus::gaussian_curvature(f, session_.signature());
      }
      if (node.kind == Ast::Kind::variable) {
        auto it = session_.bindings().find(node.text);
        if (it == session_.bindings().end())
          fail(ErrorKind::UnboundVariable, "unbound variable '" + node.text + "'", node.span);
        return it->second;
      }
      return numeric(node);
    } catch (Error &e) {
      if (!e.span())
        e.set_span(node.span);
      throw;
    } catch (const std::exception &e) {
      throw Error(ErrorKind::DomainError, e.what(), node.span);
    }
  }

private:
  Multivector mv(const Ast &node) const {
    Value v = value(node);
    if (auto *m = std::get_if<Multivector>(&v))
      return std::move(*m);
    fail(ErrorKind::DomainError,
         "a symbolic expression cannot be used as a multivector", node.span);
  }

  Multivector finish(Multivector m) const { return m.in_mode(session_.mode()); }

  Scalar scalar(const Ast &node) const {
    Multivector m = mv(node);
    if (!m.is_zero() && !m.is_scalar())
      fail(ErrorKind::DomainError, "expected a scalar argument", node.span);
    return m.coeff(Blade{});
  }

  unsigned natural(const Ast &node) const {
    Scalar s = scalar(node);
    if (s.is_float() && s.to_double() == static_cast<double>(static_cast<long>(s.to_double())))
      s = Scalar(static_cast<long>(s.to_double()));
    if (!s.is_rational() || !s.is_integer() || s.sign() < 0 || s > Scalar(64))
      fail(ErrorKind::DomainError, "expected a nonnegative integer", node.span);
    return static_cast<unsigned>(s.rational().get_num().get_ui());
  }

  Multivector numeric(const Ast &node) const {
    const Signature sig = session_.signature();
    switch (node.kind) {
    case Ast::Kind::number:
      return finish(Multivector::scalar(Scalar::parse(node.text), sig));
    case Ast::Kind::basis:
      return finish(Multivector::basis_word(node.indices, sig));
    case Ast::Kind::pi:
      return Multivector::scalar(Scalar(std::numbers::pi), sig);
    case Ast::Kind::variable:
      return mv(node);
    case Ast::Kind::unary: {
      Multivector a = mv(node.children[0]);
      return node.text == "-" ? -a : reverse(a);
    }
    case Ast::Kind::binary:
      return binary(node);
    case Ast::Kind::call:
      return call(node);
    }
    fail(ErrorKind::ParseError, "unknown node", node.span);
  }

  Multivector binary(const Ast &node) const {
    Multivector a = mv(node.children[0]);
    Multivector b = mv(node.children[1]);
    align(a, b);
    const std::string &op = node.text;
    if (op == "+")
      return a + b;
    if (op == "-")
      return a - b;
    if (op == "*")
      return a * b;
    if (op == "|")
      return inner_product(a, b);
    if (op == "^")
      return outer_product(a, b);
    // Division: exact by scalars, otherwise by the multivector inverse.
    if (b.is_zero())
      fail(ErrorKind::DomainError, "division by zero", node.children[1].span);
    if (b.is_scalar()) {
      require_same_signature(a, b);
      return a / b.coeff(Blade{});
    }
    return a * inverse(b);
  }

  unsigned dimension(const Ast &node, const Multivector &a, std::size_t arg) const {
    if (node.children.size() > arg)
      return natural(node.children[arg]);
    if (session_.default_dim())
      return *session_.default_dim();
    return a.max_dimension();
  }

  Multivector call(const Ast &node) const {
    const std::string &f = node.text;
    const auto &args = node.children;
    if (f == "grade")
      return grade_project(mv(args[0]), natural(args[1]));
    if (f == "dual") {
      Multivector a = mv(args[0]);
      return dual(a, dimension(node, a, 1));
    }
    if (f == "inv")
      return inverse(mv(args[0]));
    if (f == "nsq") {
      Multivector a = mv(args[0]);
      return Multivector::scalar(norm_squared(a), a.signature());
    }
    if (f == "mag") {
      Multivector a = mv(args[0]);
      Scalar n = norm_squared(a).abs();
      Rational root;
      if (n.is_rational() && exact_sqrt(n.rational(), root))
        return finish(Multivector::scalar(Scalar(root), a.signature()));
      return Multivector::scalar(Scalar(magnitude(a)), a.signature());
    }
    if (f == "rev")
      return reverse(mv(args[0]));
    if (f == "cross")
      return cross_product(mv(args[0]), mv(args[1]));
    if (f == "rot")
      return rotate_in_plane(mv(args[0]), mv(args[1]), mv(args[2]),
                             scalar(args[3]).to_double());
    if (f == "rotto")
      return rotate_vec_to_vec(mv(args[0]), mv(args[1]), mv(args[2]));
    if (f == "versor") {
      std::vector<Multivector> factors;
      for (std::size_t i = 1; i < args.size(); ++i)
        factors.push_back(mv(args[i]));
      return apply_versor(mv(args[0]), factors);
    }
    if (f == "coeff") {
      Multivector a = mv(args[0]);
      Multivector b = mv(args[1]);
      if (b.size() != 1)
        fail(ErrorKind::DomainError, "coeff expects a single basis blade", args[1].span);
      const auto &[blade, c] = *b.terms().begin();
      return Multivector::scalar(a.coeff(blade) / c, a.signature());
    }
    if (f == "sqrt") {
      Scalar s = scalar(args[0]);
      if (s.sign() < 0)
        fail(ErrorKind::DomainError, "square root of a negative scalar", args[0].span);
      Rational root;
      if (s.is_rational() && exact_sqrt(s.rational(), root))
        return Multivector::scalar(Scalar(root), session_.signature());
      return Multivector::scalar(Scalar(std::sqrt(s.to_double())), session_.signature());
    }
    fail(ErrorKind::ParseError, "unknown function '" + f + "'", node.span);
  }

  // Scalar field expressions for curvature(): '^' is an integer power,
  // x1..x3 are coordinates, other unbound names stay symbolic.
  Expr symbolic(const Ast &node) const {
    try {
      return symbolic_node(node);
    } catch (Error &e) {
      if (!e.span())
        e.set_span(node.span);
      throw;
    }
  }

  Expr symbolic_node(const Ast &node) const {
    switch (node.kind) {
    case Ast::Kind::number: {
      Scalar s = Scalar::parse(node.text);
      if (!s.is_rational())
        fail(ErrorKind::DomainError, "field expressions need exact constants", node.span);
      return Expr(s.rational());
    }
    case Ast::Kind::variable: {
      for (const auto &x : calculus::kCoordinates)
        if (node.text == x)
          return Expr::variable(node.text);
      auto it = session_.bindings().find(node.text);
      if (it == session_.bindings().end())
        return Expr::variable(node.text);
      if (auto *e = std::get_if<Expr>(&it->second))
        return *e;
      const auto &m = std::get<Multivector>(it->second);
      if ((m.is_zero() || m.is_scalar()) && m.coeff(Blade{}).is_rational())
        return Expr(m.coeff(Blade{}).rational());
      fail(ErrorKind::DomainError,
           "'" + node.text + "' is not an exact scalar and cannot enter a field expression",
           node.span);
    }
    case Ast::Kind::unary:
      if (node.text == "-")
        return -symbolic(node.children[0]);
      break;
    case Ast::Kind::binary: {
      Expr a = symbolic(node.children[0]);
      const std::string &op = node.text;
      if (op == "^") {
        Expr exponent = symbolic(node.children[1]);
        if (!calculus::free_variables(exponent).empty())
          fail(ErrorKind::DomainError, "exponents must be integer constants",
               node.children[1].span);
        Scalar k = calculus::eval(exponent, {});
        if (!k.is_rational() || !k.is_integer() || abs(k.rational()) > 1000)
          fail(ErrorKind::DomainError, "exponents must be integer constants",
               node.children[1].span);
        return calculus::pow(a, static_cast<int>(k.rational().get_num().get_si()));
      }
      Expr b = symbolic(node.children[1]);
      if (op == "+")
        return a + b;
      if (op == "-")
        return a - b;
      if (op == "*")
        return a * b;
      if (op == "/")
        return a / b;
      break;
    }
    case Ast::Kind::call:
      if (node.text == "sqrt")
        return calculus::sqrt(symbolic(node.children[0]));
      break;
    case Ast::Kind::basis:
    case Ast::Kind::pi:
      break;
    }
    fail(ErrorKind::DomainError, "not allowed in a scalar field expression", node.span);
  }

  const Session &session_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

} // namespace

std::vector<Segment> split_statements(std::string_view line) {
  line = line.substr(0, line.find('#'));
  std::vector<Segment> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(';', start);
    if (end == std::string_view::npos)
      end = line.size();
    std::string_view piece = line.substr(start, end - start);
    if (!trim(piece).empty())
      out.push_back({piece, start});
    start = end + 1;
  }
  return out;
}

Value Session::evaluate(const Ast &ast) const { return Evaluator(*this).value(ast); }

Outcome Session::execute(std::string_view source) {
  Statement st = parse_statement(source);
  if (st.kind == Statement::Kind::directive)
    return directive(st);
  Value v = evaluate(st.expr);
  if (auto *m = std::get_if<Multivector>(&v))
    *m = m->in_mode(mode_);
  Outcome out;
  if (st.kind == Statement::Kind::let) {
    bindings_[st.name] = v;
    out.kind = Outcome::Kind::binding;
    out.message = st.name;
  }
  out.value = std::move(v);
  return out;
}

Outcome Session::directive(const Statement &st) {
  auto bad = [&](const std::string &msg) -> Error {
    Span span = st.argument_span;
    if (span.end == span.begin)
      span = st.span;
    return Error(ErrorKind::ParseError, msg, span);
  };
  auto parse_uint = [&](const std::string &text, unsigned &out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
  };

  Outcome out;
  out.kind = Outcome::Kind::directive;
  const std::string arg = trim(st.argument);
  if (st.name == "sig") {
    unsigned p = 0;
    if (arg == "euclid" || arg == "euclidean")
      sig_ = Signature::euclidean();
    else if (parse_uint(arg, p) && p <= kMaxIndex)
      sig_ = Signature::threshold(p);
    else
      throw bad("expected ':sig <p>' with 0 <= p <= 64, or ':sig euclid'");
    out.message = "signature " + sig_.to_string();
  } else if (st.name == "dim") {
    unsigned n = 0;
    if (arg == "auto")
      dim_.reset();
    else if (parse_uint(arg, n) && n >= 1 && n <= kMaxIndex)
      dim_ = n;
    else
      throw bad("expected ':dim <n>' with 1 <= n <= 64, or ':dim auto'");
    out.message = dim_ ? "dimension " + std::to_string(*dim_) : "dimension auto";
  } else if (st.name == "mode") {
    if (arg == "rational")
      mode_ = Mode::rational;
    else if (arg == "float")
      mode_ = Mode::floating;
    else
      throw bad("expected ':mode rational' or ':mode float'");
    out.message = "mode " + arg;
  } else if (st.name == "format") {
    if (arg == "text")
      format_ = OutputFormat::text;
    else if (arg == "json")
      format_ = OutputFormat::json;
    else
      throw bad("expected ':format text' or ':format json'");
    out.message = "format " + arg;
  } else {
    throw Error(ErrorKind::ParseError,
                "unknown directive ':" + st.name + "' (expected sig, dim, mode or format)",
                Span{st.span.begin, st.span.begin + 1 + st.name.size()});
  }
  return out;
}

std::string render_text(const Value &v) {
  if (auto *m = std::get_if<Multivector>(&v))
    return format(*m);
  return std::get<calculus::Expr>(v).to_string();
}

std::string Session::render(const Outcome &o) const {
  if (format_ == OutputFormat::json) {
    if (o.kind == Outcome::Kind::directive)
      return nlohmann::json{{"directive", o.message}}.dump();
    if (auto *m = std::get_if<Multivector>(&*o.value))
      return to_json(*m).dump();
    return nlohmann::json{{"expr", std::get<calculus::Expr>(*o.value).to_string()}}.dump();
  }
  if (o.kind == Outcome::Kind::directive)
    return o.message;
  std::string text = render_text(*o.value);
  return o.kind == Outcome::Kind::binding ? o.message + " = " + text : text;
}

} // namespace clifford::lang
