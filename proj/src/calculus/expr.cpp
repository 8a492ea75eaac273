#include "clifford/calculus/expr.hpp"

#include "clifford/error.hpp"

#include <algorithm>
#include <cmath>

namespace clifford::calculus {

struct Expr::Node {
  Kind kind = Kind::constant;
  Rational value;
  std::string name;
  std::vector<Expr> children;
  int exponent = 0;
};

struct ExprAccess {
  static Expr make(Expr::Node node) {
    return Expr(std::make_shared<const Expr::Node>(std::move(node)));
  }
};

namespace {

Expr make_constant(Rational v) { return Expr(std::move(v)); }

} // namespace

Expr::Expr() : Expr(Rational(0)) {}

Expr::Expr(int value) : Expr(Rational(value)) {}

Expr::Expr(Rational value) {
  value.canonicalize();
  Node n;
  n.kind = Kind::constant;
  n.value = std::move(value);
  node_ = std::make_shared<const Node>(std::move(n));
}

Expr Expr::variable(std::string name) {
  Node n;
  n.kind = Kind::variable;
  n.name = std::move(name);
  return ExprAccess::make(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Rational constant = 0;
  for (Expr &t : terms) {
    if (t.kind() == Kind::sum) {
      for (const Expr &inner : t.children())
        if (inner.is_constant())
          constant += inner.value();
        else
          flat.push_back(inner);
    } else if (t.is_constant()) {
      constant += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (sgn(constant) != 0)
    flat.push_back(make_constant(constant));
  if (flat.empty())
    return Expr();
  if (flat.size() == 1)
    return flat.front();
  Node n;
  n.kind = Kind::sum;
  n.children = std::move(flat);
  return ExprAccess::make(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Rational constant = 1;
  auto absorb = [&](const Expr &f) {
    if (f.is_constant())
      constant *= f.value();
    else
      flat.push_back(f);
  };
  for (const Expr &f : factors) {
    if (f.kind() == Kind::product)
      for (const Expr &inner : f.children())
        absorb(inner);
    else
      absorb(f);
  }
  if (sgn(constant) == 0)
    return Expr();
  if (constant != 1)
    flat.insert(flat.begin(), make_constant(constant));
  if (flat.empty())
    return Expr(1);
  if (flat.size() == 1)
    return flat.front();
  Node n;
  n.kind = Kind::product;
  n.children = std::move(flat);
  return ExprAccess::make(std::move(n));
}

Expr Expr::power(Expr base, int exponent) {
  if (exponent == 0)
    return Expr(1);
  if (exponent == 1)
    return base;
  if (base.kind() == Kind::power)
    return power(base.children()[0], base.exponent() * exponent);
  if (base.is_constant() && (exponent > 0 || sgn(base.value()) != 0)) {
    Rational r = 1;
    for (int i = 0; i < std::abs(exponent); ++i)
      r *= base.value();
    if (exponent < 0)
      r = 1 / r;
    return make_constant(r);
  }
  Node n;
  n.kind = Kind::power;
  n.children = {std::move(base)};
  n.exponent = exponent;
  return ExprAccess::make(std::move(n));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
  if (denominator.is_one())
    return numerator;
  if (numerator.is_zero() && !denominator.is_zero())
    return Expr();
  if (numerator.is_constant() && denominator.is_constant() && !denominator.is_zero())
    return make_constant(numerator.value() / denominator.value());
  Node n;
  n.kind = Kind::quotient;
  n.children = {std::move(numerator), std::move(denominator)};
  return ExprAccess::make(std::move(n));
}

Expr Expr::square_root(Expr argument) {
  if (argument.is_constant()) {
    Rational root;
    if (exact_sqrt(argument.value(), root))
      return make_constant(root);
  }
  Node n;
  n.kind = Kind::sqrt;
  n.children = {std::move(argument)};
  return ExprAccess::make(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational &Expr::value() const { return node_->value; }
const std::string &Expr::name() const { return node_->name; }
std::span<const Expr> Expr::children() const { return node_->children; }
int Expr::exponent() const { return node_->exponent; }
bool Expr::is_zero() const { return is_constant() && sgn(value()) == 0; }
bool Expr::is_one() const { return is_constant() && value() == 1; }

Expr operator-(const Expr &a, const Expr &b) { return Expr::sum({a, -b}); }
Expr operator-(const Expr &a) { return Expr::product({Expr(-1), a}); }

Expr pow(const Expr &base, int exponent) { return Expr::power(base, exponent); }
Expr sqrt(const Expr &argument) { return Expr::square_root(argument); }

bool operator==(const Expr &a, const Expr &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case Expr::Kind::constant: return a.value() == b.value();
  case Expr::Kind::variable: return a.name() == b.name();
  case Expr::Kind::power:
    if (a.exponent() != b.exponent())
      return false;
    break;
  default: break;
  }
  auto ca = a.children(), cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// ---------------------------------------------------------------- printing

namespace {

enum Prec { kSum = 1, kProduct = 2, kPower = 3, kAtom = 4 };

bool negative_leading(const Expr &e) {
  if (e.is_constant())
    return sgn(e.value()) < 0;
  if (e.kind() == Expr::Kind::product)
    return negative_leading(e.children()[0]);
  if (e.kind() == Expr::Kind::quotient)
    return negative_leading(e.children()[0]);
  return false;
}

int precedence(const Expr &e) {
  switch (e.kind()) {
  case Expr::Kind::constant:
    return (e.value().get_den() == 1 && sgn(e.value()) >= 0) ? kAtom : kProduct;
  case Expr::Kind::variable:
  case Expr::Kind::sqrt: return kAtom;
  case Expr::Kind::sum: return kSum;
  case Expr::Kind::product:
  case Expr::Kind::quotient: return negative_leading(e) ? kSum : kProduct;
  case Expr::Kind::power: return kPower;
  }
  return kAtom;
}

std::string print(const Expr &e);

std::string wrap(const Expr &e, int min_prec) {
  std::string s = print(e);
  return precedence(e) >= min_prec ? s : "(" + s + ")";
}

std::string print(const Expr &e) {
  switch (e.kind()) {
  case Expr::Kind::constant: return e.value().get_str();
  case Expr::Kind::variable: return e.name();
  case Expr::Kind::sqrt: return "sqrt(" + print(e.children()[0]) + ")";
  case Expr::Kind::power: {
    std::string exp = e.exponent() < 0 ? "(" + std::to_string(e.exponent()) + ")"
                                       : std::to_string(e.exponent());
    return wrap(e.children()[0], kAtom) + "^" + exp;
  }
  case Expr::Kind::product: {
    auto fs = e.children();
    std::string out;
    std::size_t first = 0;
    if (fs[0].is_constant() && fs[0].value() == -1) {
      out = "-";
      first = 1;
    } else if (fs[0].is_constant() && sgn(fs[0].value()) < 0) {
      out = "-" + wrap(Expr(Rational(-fs[0].value())), kPower) + "*";
      first = 1;
    }
    for (std::size_t i = first; i < fs.size(); ++i) {
      if (i > first)
        out += "*";
      out += wrap(fs[i], kPower);
    }
    return out;
  }
  case Expr::Kind::quotient: {
    auto c = e.children();
    std::string num = negative_leading(c[0]) && c[0].kind() != Expr::Kind::sum
                          ? print(c[0])
                          : wrap(c[0], kProduct);
    return num + "/" + wrap(c[1], kPower);
  }
  case Expr::Kind::sum: {
    std::string out;
    bool first = true;
    for (const Expr &t : e.children()) {
      std::string s = print(t);
      if (negative_leading(t)) {
        out += first ? s : " - " + s.substr(1);
      } else {
        out += first ? s : " + " + s;
      }
      first = false;
    }
    return out;
  }
  }
  return "?";
}

} // namespace

std::string Expr::to_string() const { return print(*this); }

// ---------------------------------------------------------- differentiation

Expr diff(const Expr &e, const std::string &v) {
  switch (e.kind()) {
  case Expr::Kind::constant: return Expr();
  case Expr::Kind::variable: return Expr(e.name() == v ? 1 : 0);
  case Expr::Kind::sum: {
    std::vector<Expr> terms;
    for (const Expr &t : e.children())
      terms.push_back(diff(t, v));
    return Expr::sum(std::move(terms));
  }
  case Expr::Kind::product: {
    auto fs = e.children();
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Expr d = diff(fs[i], v);
      if (d.is_zero())
        continue;
      std::vector<Expr> factors(fs.begin(), fs.end());
      factors[i] = d;
      terms.push_back(Expr::product(std::move(factors)));
    }
    return Expr::sum(std::move(terms));
  }
  case Expr::Kind::power: {
    const Expr &base = e.children()[0];
    Expr d = diff(base, v);
    if (d.is_zero())
      return Expr();
    return Expr::product({Expr(e.exponent()), pow(base, e.exponent() - 1), d});
  }
  case Expr::Kind::quotient: {
    const Expr &a = e.children()[0];
    const Expr &b = e.children()[1];
    Expr da = diff(a, v), db = diff(b, v);
    if (db.is_zero())
      return da / b;
    return (da * b - a * db) / pow(b, 2);
  }
  case Expr::Kind::sqrt: {
    const Expr &a = e.children()[0];
    Expr da = diff(a, v);
    if (da.is_zero())
      return Expr();
    return da / (Expr(2) * e);
  }
  }
  return Expr();
}

// --------------------------------------------------------------- evaluation

Scalar eval(const Expr &e, const Point &point) {
  switch (e.kind()) {
  case Expr::Kind::constant: return Scalar(e.value());
  case Expr::Kind::variable: {
    auto it = point.find(e.name());
    if (it == point.end())
      throw Error(ErrorKind::UnboundVariable, "variable '" + e.name() + "' has no value");
    return it->second;
  }
  case Expr::Kind::sum: {
    Scalar acc = 0;
    for (const Expr &t : e.children())
      acc += eval(t, point);
    return acc;
  }
  case Expr::Kind::product: {
    Scalar acc = 1;
    for (const Expr &f : e.children())
      acc *= eval(f, point);
    return acc;
  }
  case Expr::Kind::power: {
    Scalar base = eval(e.children()[0], point);
    int n = e.exponent();
    if (n < 0 && base.is_zero())
      throw Error(ErrorKind::DomainError, "zero raised to a negative power");
    Scalar acc = 1;
    for (int i = 0; i < std::abs(n); ++i)
      acc *= base;
    return n < 0 ? Scalar(1) / acc : acc;
  }
  case Expr::Kind::quotient: {
    Scalar num = eval(e.children()[0], point);
    Scalar den = eval(e.children()[1], point);
    if (den.is_zero())
      throw Error(ErrorKind::DomainError, "division by zero in " + e.to_string());
    return num / den;
  }
  case Expr::Kind::sqrt: {
    Scalar arg = eval(e.children()[0], point);
    if (arg.sign() < 0)
      throw Error(ErrorKind::DomainError, "square root of a negative value in " + e.to_string());
    if (arg.is_rational()) {
      Rational root;
      if (exact_sqrt(arg.rational(), root))
        return Scalar(root);
    }
    return Scalar(std::sqrt(arg.to_double()));
  }
  }
  return Scalar(0);
}

std::set<std::string> free_variables(const Expr &e) {
  std::set<std::string> out;
  if (e.kind() == Expr::Kind::variable) {
    out.insert(e.name());
    return out;
  }
  for (const Expr &c : e.children()) {
    auto inner = free_variables(c);
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

} // namespace clifford::calculus
