#include "clifford/calculus/expr.hpp"

#include "clifford/error.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace clifford::calculus {

namespace {

// Atoms are variables and irreducible square roots. Their index order is
// the lexicographic monomial priority.
struct AtomTable {
  std::vector<std::string> keys;
  std::vector<Expr> exprs;

  std::size_t id(const std::string &key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return static_cast<std::size_t>(it - keys.begin());
  }
};

using Monomial = std::vector<int>;

// Lexicographic order, larger first, so a Poly's first entry is its leading term.
struct LexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const { return a > b; }
};

using Poly = std::map<Monomial, Rational, LexGreater>;

struct Context {
  AtomTable atoms;
  std::unordered_map<const void *, Expr> sqrt_args;
};

Monomial unit_monomial(const Context &ctx) { return Monomial(ctx.atoms.keys.size(), 0); }

Poly constant_poly(const Context &ctx, const Rational &c) {
  Poly p;
  if (sgn(c) != 0)
    p.emplace(unit_monomial(ctx), c);
  return p;
}

bool is_constant(const Poly &p) {
  return p.empty() ||
         (p.size() == 1 && std::all_of(p.begin()->first.begin(), p.begin()->first.end(),
                                       [](int e) { return e == 0; }));
}

Rational constant_value(const Poly &p) { return p.empty() ? Rational(0) : p.begin()->second; }

void add_term(Poly &p, const Monomial &m, const Rational &c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      p.erase(it);
  }
}

Poly add(const Poly &a, const Poly &b) {
  Poly out = a;
  for (const auto &[m, c] : b)
    add_term(out, m, c);
  return out;
}

Poly scale(const Poly &a, const Rational &c) {
  Poly out;
  if (sgn(c) == 0)
    return out;
  for (const auto &[m, x] : a)
    out.emplace(m, x * c);
  return out;
}

Poly mul(const Poly &a, const Poly &b) {
  Poly out;
  for (const auto &[ma, ca] : a) {
    for (const auto &[mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = ma[i] + mb[i];
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

// Exact multivariate division; nullopt unless d divides p.
std::optional<Poly> divide_exact(Poly p, const Poly &d) {
  if (d.empty())
    return std::nullopt;
  const auto &[lead_m, lead_c] = *d.begin();
  Poly q;
  while (!p.empty()) {
    const auto &[pm, pc] = *p.begin();
    Monomial m(pm.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = pm[i] - lead_m[i];
      if (m[i] < 0)
        return std::nullopt;
    }
    Rational c = pc / lead_c;
    Poly step;
    step.emplace(m, c);
    add_term(q, m, c);
    p = add(p, scale(mul(step, d), Rational(-1)));
  }
  return q;
}

// Rational content making the remaining polynomial integral, coprime and
// with a positive leading coefficient.
Rational content(const Poly &p) {
  if (p.empty())
    return Rational(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto &[m, c] : p) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  if (sgn(p.begin()->second) < 0)
    out = -out;
  return out;
}

struct Factor {
  Poly poly;
  int multiplicity;
};

// num / product(factors), every factor primitive and non-constant.
struct RatFunc {
  Poly num;
  std::vector<Factor> den;
};

RatFunc from_poly(Poly p) { return {std::move(p), {}}; }

// Cancels numerator factors against the denominator where division is exact.
void reduce(RatFunc &r) {
  if (r.num.empty()) {
    r.den.clear();
    return;
  }
  for (Factor &f : r.den) {
    while (f.multiplicity > 0) {
      auto q = divide_exact(r.num, f.poly);
      if (!q)
        break;
      r.num = std::move(*q);
      --f.multiplicity;
    }
  }
  std::erase_if(r.den, [](const Factor &f) { return f.multiplicity == 0; });
}

// Adds p^mult to the denominator, reusing known factors. Returns the
// constant that must divide the numerator to compensate.
Rational add_den_factor(const Context &ctx, std::vector<Factor> &den, Poly p, int mult) {
  if (is_constant(p))
    return constant_value(p);
  Rational leftover = 1;
  auto is_bare_atom = [](const Poly &q) {
    const auto &[m, c] = *q.begin();
    int total = 0;
    for (int e : m)
      total += e;
    return c == 1 && total == 1;
  };
  if (p.size() == 1 && !is_bare_atom(p)) {
    // Monomials split into one factor per atom.
    const auto &[m, c] = *p.begin();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      Monomial atom = unit_monomial(ctx);
      atom[i] = 1;
      Poly ap;
      ap.emplace(atom, Rational(1));
      leftover *= add_den_factor(ctx, den, std::move(ap), mult * m[i]);
    }
    Rational cm = 1;
    for (int k = 0; k < mult; ++k)
      cm *= c;
    return leftover * cm;
  }
  for (Factor &f : den) {
    while (!is_constant(p)) {
      auto q = divide_exact(p, f.poly);
      if (!q)
        break;
      p = std::move(*q);
      f.multiplicity += mult;
    }
  }
  if (is_constant(p)) {
    Rational c = constant_value(p);
    Rational cm = 1;
    for (int k = 0; k < mult; ++k)
      cm *= c;
    return cm;
  }
  Rational c = content(p);
  Poly prim = scale(p, 1 / c);
  den.push_back({std::move(prim), mult});
  Rational cm = 1;
  for (int k = 0; k < mult; ++k)
    cm *= c;
  return cm;
}

Poly expand_factors(const std::vector<Factor> &fs, const Context &ctx) {
  Poly out = constant_poly(ctx, Rational(1));
  for (const Factor &f : fs)
    for (int k = 0; k < f.multiplicity; ++k)
      out = mul(out, f.poly);
  return out;
}

int multiplicity_of(const std::vector<Factor> &fs, const Poly &p) {
  for (const Factor &f : fs)
    if (f.poly == p)
      return f.multiplicity;
  return 0;
}

RatFunc add(const Context &ctx, const RatFunc &a, const RatFunc &b) {
  if (a.num.empty())
    return b;
  if (b.num.empty())
    return a;
  // Common denominator: union of factors at max multiplicity.
  std::vector<Factor> common = a.den;
  for (const Factor &f : b.den) {
    auto it = std::find_if(common.begin(), common.end(),
                           [&](const Factor &g) { return g.poly == f.poly; });
    if (it == common.end())
      common.push_back(f);
    else
      it->multiplicity = std::max(it->multiplicity, f.multiplicity);
  }
  auto lift = [&](const RatFunc &r) {
    std::vector<Factor> missing;
    for (const Factor &f : common) {
      int extra = f.multiplicity - multiplicity_of(r.den, f.poly);
      if (extra > 0)
        missing.push_back({f.poly, extra});
    }
    return mul(r.num, expand_factors(missing, ctx));
  };
  RatFunc out{add(lift(a), lift(b)), std::move(common)};
  reduce(out);
  return out;
}

RatFunc mul(const Context &ctx, const RatFunc &a, const RatFunc &b) {
  RatFunc out{mul(a.num, b.num), a.den};
  Rational comp = 1;
  for (const Factor &f : b.den)
    comp *= add_den_factor(ctx, out.den, f.poly, f.multiplicity);
  out.num = scale(out.num, 1 / comp);
  reduce(out);
  return out;
}

RatFunc reciprocal(const Context &ctx, const RatFunc &a) {
  if (a.num.empty())
    throw Error(ErrorKind::DomainError, "division by an expression that simplifies to zero");
  RatFunc out{expand_factors(a.den, ctx), {}};
  Rational comp = add_den_factor(ctx, out.den, a.num, 1);
  out.num = scale(out.num, 1 / comp);
  reduce(out);
  return out;
}

RatFunc power(const Context &ctx, const RatFunc &a, int n) {
  RatFunc base = n < 0 ? reciprocal(ctx, a) : a;
  RatFunc out = from_poly(constant_poly(ctx, Rational(1)));
  for (int i = 0; i < std::abs(n); ++i)
    out = mul(ctx, out, base);
  return out;
}

std::string sqrt_key(const Expr &simplified_arg) { return "~sqrt(" + simplified_arg.to_string() + ")"; }

const Expr &simplified_sqrt_arg(Context &ctx, const Expr &e) {
  const void *key = &e.children()[0];
  auto it = ctx.sqrt_args.find(key);
  if (it == ctx.sqrt_args.end())
    it = ctx.sqrt_args.emplace(key, simplify(e.children()[0])).first;
  return it->second;
}

void collect_atoms(Context &ctx, const Expr &e, std::map<std::string, Expr> &found) {
  switch (e.kind()) {
  case Expr::Kind::constant: return;
  case Expr::Kind::variable: found.emplace(e.name(), e); return;
  case Expr::Kind::sqrt: {
    const Expr &arg = simplified_sqrt_arg(ctx, e);
    Expr root = sqrt(arg);
    if (!root.is_constant())
      found.emplace(sqrt_key(arg), root);
    return;
  }
  default:
    for (const Expr &c : e.children())
      collect_atoms(ctx, c, found);
  }
}

Poly atom_poly(const Context &ctx, const std::string &key) {
  Monomial m = unit_monomial(ctx);
  m[ctx.atoms.id(key)] = 1;
  Poly p;
  p.emplace(std::move(m), Rational(1));
  return p;
}

RatFunc convert(Context &ctx, const Expr &e) {
  switch (e.kind()) {
  case Expr::Kind::constant: return from_poly(constant_poly(ctx, e.value()));
  case Expr::Kind::variable: return from_poly(atom_poly(ctx, e.name()));
  case Expr::Kind::sum: {
    RatFunc acc = from_poly({});
    for (const Expr &t : e.children())
      acc = add(ctx, acc, convert(ctx, t));
    return acc;
  }
  case Expr::Kind::product: {
    RatFunc acc = from_poly(constant_poly(ctx, Rational(1)));
    for (const Expr &f : e.children())
      acc = mul(ctx, acc, convert(ctx, f));
    return acc;
  }
  case Expr::Kind::power: return power(ctx, convert(ctx, e.children()[0]), e.exponent());
  case Expr::Kind::quotient: {
    RatFunc num = convert(ctx, e.children()[0]);
    RatFunc den = convert(ctx, e.children()[1]);
    return mul(ctx, num, reciprocal(ctx, den));
  }
  case Expr::Kind::sqrt: {
    const Expr &arg = simplified_sqrt_arg(ctx, e);
    Expr root = sqrt(arg);
    if (root.is_constant())
      return from_poly(constant_poly(ctx, root.value()));
    return from_poly(atom_poly(ctx, sqrt_key(arg)));
  }
  }
  return from_poly({});
}

Expr poly_to_expr(const Context &ctx, const Poly &p) {
  std::vector<Expr> terms;
  for (const auto &[m, c] : p) {
    std::vector<Expr> factors{Expr(c)};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0)
        factors.push_back(pow(ctx.atoms.exprs[i], m[i]));
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

} // namespace

Expr simplify(const Expr &e) {
  Context ctx;
  std::map<std::string, Expr> found;
  collect_atoms(ctx, e, found);
  for (auto &[key, atom] : found) {
    ctx.atoms.keys.push_back(key);
    ctx.atoms.exprs.push_back(atom);
  }
  RatFunc r = convert(ctx, e);
  reduce(r);
  if (r.den.empty())
    return poly_to_expr(ctx, r.num);
  // Fractional numerator coefficients move into the denominator.
  mpz_class den_lcm = 1;
  for (const auto &[m, c] : r.num)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Expr num = poly_to_expr(ctx, scale(r.num, Rational(den_lcm)));
  std::vector<Expr> den{Expr(Rational(den_lcm))};
  for (const Factor &f : r.den)
    den.push_back(pow(poly_to_expr(ctx, f.poly), f.multiplicity));
  return Expr::quotient(num, Expr::product(std::move(den)));
}

} // namespace clifford::calculus
