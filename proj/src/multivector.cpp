#include "clifford/multivector.hpp"

#include "clifford/error.hpp"

#include <algorithm>
#include <cmath>

namespace clifford {

namespace {

Mode combined_mode(Mode a, Mode b) {
  return (a == Mode::floating || b == Mode::floating) ? Mode::floating : Mode::rational;
}

bool reverse_flips(unsigned grade) { return ((grade * (grade - 1) / 2) & 1u) != 0; }

bool is_nonzero_pure_scalar(const Multivector &m) {
  return !m.is_zero() && m.is_scalar();
}

} // namespace

void require_same_signature(const Multivector &a, const Multivector &b) {
  if (a.signature() != b.signature())
    throw Error(ErrorKind::SignatureMismatch, "operands have signatures " +
                                                  a.signature().to_string() + " and " +
                                                  b.signature().to_string());
}

Multivector Multivector::scalar(Scalar c, Signature sig) {
  return blade(Blade(), std::move(c), sig);
}

Multivector Multivector::blade(Blade b, Scalar c, Signature sig) {
  Multivector out(sig, c.mode());
  if (!c.is_zero())
    out.terms_.emplace(b, std::move(c));
  return out;
}

Multivector Multivector::basis(unsigned index, Signature sig) {
  return blade(Blade::generator(index), 1, sig);
}

Multivector Multivector::basis_word(std::span<const unsigned> indices, Signature sig) {
  Blade acc;
  int sign = 1;
  for (unsigned i : indices) {
    BladeProduct bp = blade_product(acc, Blade::generator(i), sig);
    sign *= bp.sign;
    acc = bp.blade;
  }
  return blade(acc, sign, sig);
}

Scalar Multivector::coeff(Blade b) const {
  auto it = terms_.find(b);
  if (it == terms_.end())
    return mode_ == Mode::floating ? Scalar(0.0) : Scalar(0);
  return it->second;
}

void Multivector::accumulate(Blade b, const Scalar &c) {
  if (c.is_zero())
    return;
  if (c.is_float() && mode_ == Mode::rational)
    *this = to_float();
  auto [it, inserted] = terms_.try_emplace(b, c.in_mode(mode_));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

unsigned Multivector::max_dimension() const {
  std::uint64_t all = 0;
  for (const auto &[b, c] : terms_)
    all |= b.bits();
  return clifford::max_dimension(Blade(all));
}

std::vector<unsigned> Multivector::grades() const {
  std::vector<unsigned> out;
  for (const auto &[b, c] : terms_) {
    unsigned g = grade_of(b);
    if (out.empty() || out.back() != g)
      out.push_back(g);
  }
  return out;
}

bool Multivector::is_grade(unsigned k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const auto &t) { return grade_of(t.first) == k; });
}

Scalar Multivector::scalar_value() const {
  if (!is_scalar())
    throw Error(ErrorKind::DomainError, "expected a scalar, got a multivector with higher grades");
  return coeff(Blade());
}

Multivector Multivector::to_float() const {
  Multivector out(sig_, Mode::floating);
  for (const auto &[b, c] : terms_)
    out.terms_.emplace(b, c.to_float());
  return out;
}

Multivector Multivector::chop(double eps) const {
  if (mode_ != Mode::floating)
    return *this;
  double largest = 0;
  for (const auto &[b, c] : terms_)
    largest = std::max(largest, std::abs(c.to_double()));
  Multivector out(sig_, mode_);
  for (const auto &[b, c] : terms_)
    if (std::abs(c.to_double()) > eps * largest)
      out.terms_.emplace(b, c);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_, mode_);
  for (const auto &[b, c] : terms_)
    out.terms_.emplace(b, -c);
  return out;
}

Multivector &Multivector::operator+=(const Multivector &o) {
  require_same_signature(*this, o);
  if (o.mode_ == Mode::floating && mode_ == Mode::rational)
    *this = to_float();
  for (const auto &[b, c] : o.terms_)
    accumulate(b, c);
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) { return *this += -o; }

Multivector operator*(const Multivector &a, const Multivector &b) {
  require_same_signature(a, b);
  Multivector out(a.sig_, combined_mode(a.mode_, b.mode_));
  for (const auto &[ba, ca] : a.terms_) {
    for (const auto &[bb, cb] : b.terms_) {
      BladeProduct bp = blade_product(ba, bb, a.sig_);
      Scalar c = ca * cb;
      out.accumulate(bp.blade, bp.sign < 0 ? -c : c);
    }
  }
  return out;
}

Multivector operator*(const Scalar &c, const Multivector &a) {
  Multivector out(a.sig_, combined_mode(a.mode_, c.mode()));
  if (c.is_zero())
    return out;
  for (const auto &[b, x] : a.terms_)
    out.terms_.emplace(b, x * c);
  return out;
}

Multivector operator/(const Multivector &a, const Scalar &c) {
  if (c.is_zero())
    throw Error(ErrorKind::DomainError, "division by zero");
  Multivector out(a.sig_, combined_mode(a.mode_, c.mode()));
  for (const auto &[b, x] : a.terms_)
    out.terms_.emplace(b, x / c);
  return out;
}

bool operator==(const Multivector &a, const Multivector &b) {
  if (a.sig_ != b.sig_ || a.terms_.size() != b.terms_.size())
    return false;
  auto ib = b.terms_.begin();
  for (const auto &[blade, c] : a.terms_) {
    if (ib->first != blade || !(ib->second == c))
      return false;
    ++ib;
  }
  return true;
}

Multivector add(const Multivector &a, const Multivector &b) { return a + b; }

Multivector scale(const Scalar &c, const Multivector &a) { return c * a; }

Multivector geometric_product(const Multivector &a, const Multivector &b) { return a * b; }

Multivector geometric_product(std::span<const Multivector> factors) {
  if (factors.empty())
    throw Error(ErrorKind::DomainError, "geometric product of no factors");
  Multivector acc = factors.front();
  for (const Multivector &f : factors.subspan(1))
    acc = acc * f;
  return acc;
}

Multivector geometric_product(std::initializer_list<Multivector> factors) {
  return geometric_product(std::span<const Multivector>(factors.begin(), factors.size()));
}

Multivector grade_project(const Multivector &a, unsigned k) {
  Multivector out(a.signature(), a.mode());
  for (const auto &[b, c] : a.terms())
    if (grade_of(b) == k)
      out.accumulate(b, c);
  return out;
}

namespace {

// Shared driver for the inner and outer products: multiply blade pairs and
// keep only the grade selected from the operand grades. Equivalent to
// projecting <<a>_k <b>_l>_target since every blade product is one blade.
template <typename TargetGrade>
Multivector graded_product(const Multivector &a, const Multivector &b, TargetGrade target) {
  require_same_signature(a, b);
  Multivector out(a.signature(), combined_mode(a.mode(), b.mode()));
  for (const auto &[ba, ca] : a.terms()) {
    for (const auto &[bb, cb] : b.terms()) {
      std::optional<unsigned> want = target(grade_of(ba), grade_of(bb));
      if (!want)
        continue;
      BladeProduct bp = blade_product(ba, bb, a.signature());
      if (grade_of(bp.blade) != *want)
        continue;
      Scalar c = ca * cb;
      out.accumulate(bp.blade, bp.sign < 0 ? -c : c);
    }
  }
  return out;
}

} // namespace

Multivector inner_product(const Multivector &a, const Multivector &b) {
  return graded_product(a, b, [](unsigned k, unsigned l) -> std::optional<unsigned> {
    if (k == 0 || l == 0)
      return std::nullopt;
    return k > l ? k - l : l - k;
  });
}

Multivector outer_product(const Multivector &a, const Multivector &b) {
  return graded_product(a, b,
                        [](unsigned k, unsigned l) -> std::optional<unsigned> { return k + l; });
}

Multivector outer_product(std::span<const Multivector> factors) {
  if (factors.empty())
    throw Error(ErrorKind::DomainError, "outer product of no factors");
  Multivector acc = factors.front();
  for (const Multivector &f : factors.subspan(1))
    acc = outer_product(acc, f);
  return acc;
}

Multivector outer_product(std::initializer_list<Multivector> factors) {
  return outer_product(std::span<const Multivector>(factors.begin(), factors.size()));
}

Multivector reverse(const Multivector &a) {
  Multivector out(a.signature(), a.mode());
  for (const auto &[b, c] : a.terms())
    out.accumulate(b, reverse_flips(grade_of(b)) ? -c : c);
  return out;
}

Scalar norm_squared(const Multivector &a) {
  // <~A A>_0 only needs the diagonal blade pairs: blade * blade is scalar
  // iff the two blades coincide.
  Scalar acc = a.mode() == Mode::floating ? Scalar(0.0) : Scalar(0);
  for (const auto &[b, c] : a.terms()) {
    BladeProduct bp = blade_product(b, b, a.signature());
    int sign = bp.sign * (reverse_flips(grade_of(b)) ? -1 : 1);
    Scalar sq = c * c;
    acc += sign < 0 ? -sq : sq;
  }
  return acc;
}

double magnitude(const Multivector &a) { return std::sqrt(std::abs(norm_squared(a).to_double())); }

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

bool pivot_is_zero(const Scalar &s, double tol) {
  return s.is_rational() ? s.is_zero() : std::abs(s.to_double()) <= tol;
}

} // namespace

InverseOutcome solve_inverse(const Multivector &a) {
  if (a.is_zero())
    throw Error(ErrorKind::ZeroMultivector, "the zero multivector has no inverse");

  Multivector rev = reverse(a);
  Multivector rev_a = rev * a;
  if (is_nonzero_pure_scalar(rev_a)) {
    // A left inverse is two-sided in a finite-dimensional algebra.
    return {rev / rev_a.scalar_value(), std::nullopt};
  }

  // Left multiplication by a on the 2^n blade basis, solved for a x = 1.
  unsigned n = a.max_dimension();
  if (n > 12)
    throw Error(ErrorKind::DimensionTooLarge,
                "general inverse limited to 12 generators, got " + std::to_string(n));
  const std::size_t size = std::size_t{1} << n;
  const bool exact = a.mode() == Mode::rational;
  const Scalar zero = exact ? Scalar(0) : Scalar(0.0);

  Matrix m(size, std::vector<Scalar>(size + 1, zero));
  for (std::size_t col = 0; col < size; ++col) {
    for (const auto &[b, c] : a.terms()) {
      BladeProduct bp = blade_product(b, Blade(col), a.signature());
      m[bp.blade.bits()][col] = bp.sign < 0 ? -c : c;
    }
  }
  m[0][size] = exact ? Scalar(1) : Scalar(1.0);

  double scale_ref = 0;
  for (const auto &[b, c] : a.terms())
    scale_ref = std::max(scale_ref, std::abs(c.to_double()));
  const double tol = 1e-12 * scale_ref * static_cast<double>(size);

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(size, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < size && row < size; ++col) {
    std::size_t best = size;
    for (std::size_t r = row; r < size; ++r) {
      if (pivot_is_zero(m[r][col], tol))
        continue;
      if (exact) {
        best = r;
        break;
      }
      if (best == size || std::abs(m[r][col].to_double()) > std::abs(m[best][col].to_double()))
        best = r;
    }
    if (best == size)
      continue;
    std::swap(m[row], m[best]);
    Scalar inv_pivot = (exact ? Scalar(1) : Scalar(1.0)) / m[row][col];
    for (std::size_t c = col; c <= size; ++c)
      m[row][c] *= inv_pivot;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == row || m[r][col].is_zero())
        continue;
      Scalar factor = m[r][col];
      for (std::size_t c = col; c <= size; ++c)
        m[r][c] -= factor * m[row][c];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }

  if (row < size) {
    std::size_t free_col = 0;
    while (is_pivot[free_col])
      ++free_col;
    Multivector witness(a.signature(), a.mode());
    witness.accumulate(Blade(free_col), exact ? Scalar(1) : Scalar(1.0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      witness.accumulate(Blade(pivot_col_of_row[r]), -m[r][free_col]);
    return {std::nullopt, std::move(witness)};
  }

  Multivector x(a.signature(), a.mode());
  for (std::size_t r = 0; r < size; ++r)
    x.accumulate(Blade(pivot_col_of_row[r]), m[r][size]);
  return {std::move(x), std::nullopt};
}

Multivector inverse(const Multivector &a) {
  InverseOutcome out = solve_inverse(a);
  if (!out.inverse)
    throw Error(ErrorKind::Singular, "multivector is a zero divisor and has no inverse");
  return std::move(*out.inverse);
}

Multivector pseudoscalar(unsigned dim, Signature sig) {
  if (dim == 0)
    return Multivector::scalar(1, sig);
  if (dim > kMaxIndex)
    throw Error(ErrorKind::IndexOutOfRange, "pseudoscalar dimension above 64");
  std::uint64_t bits = dim == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
  return Multivector::blade(Blade(bits), 1, sig);
}

Multivector dual(const Multivector &a, unsigned dim) {
  if (dim == 0 || dim < a.max_dimension())
    throw Error(ErrorKind::DimensionTooSmall,
                "dual dimension " + std::to_string(dim) + " is below the multivector's " +
                    std::to_string(a.max_dimension()));
  Multivector ps = pseudoscalar(dim, a.signature());
  Multivector ps_sq = reverse(ps) * ps;
  // Nondegenerate metrics always give +-1 here; the check is the contract.
  if (!is_nonzero_pure_scalar(ps_sq))
    throw Error(ErrorKind::Singular, "pseudoscalar is not invertible");
  Multivector ps_inv = reverse(ps) / ps_sq.scalar_value();
  return a * ps_inv;
}

std::uint64_t blade_count(unsigned n) {
  if (n >= 64)
    throw Error(ErrorKind::IndexOutOfRange, "blade count overflows 64 bits");
  return std::uint64_t{1} << n;
}

} // namespace clifford
