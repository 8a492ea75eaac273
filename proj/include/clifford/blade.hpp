#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clifford {

// Metric rule: generators e_i with i <= p square to +1, the rest to -1.
// The default-constructed signature is Euclidean (every generator +1).
class Signature {
public:
  constexpr Signature() = default;
  static constexpr Signature euclidean() { return Signature(); }
  static constexpr Signature threshold(unsigned p) { return Signature(p); }

  constexpr bool is_euclidean() const { return !p_.has_value(); }
  constexpr std::optional<unsigned> p() const { return p_; }

  friend constexpr bool operator==(const Signature &, const Signature &) = default;

  std::string to_string() const;

private:
  constexpr explicit Signature(unsigned p) : p_(p) {}
  std::optional<unsigned> p_;
};

inline constexpr unsigned kMaxIndex = 64;

// +1 or -1; index must be >= 1.
int metric_sign(unsigned index, Signature sig);

// Canonically ordered product of distinct generators, stored as a bitset:
// index i lives in bit i-1. The empty set is the scalar blade.
class Blade {
public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t bits) : bits_(bits) {}

  // Throws IndexOutOfRange for 0 or > 64; repeated or unsorted input is
  // rejected the same way (use the multivector layer to canonicalize words).
  static Blade from_indices(std::span<const unsigned> indices);
  static Blade from_indices(std::initializer_list<unsigned> indices) {
    return from_indices(std::span<const unsigned>(indices.begin(), indices.size()));
  }
  static Blade generator(unsigned index);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_scalar() const { return bits_ == 0; }
  constexpr bool contains(unsigned index) const {
    return index >= 1 && index <= kMaxIndex && ((bits_ >> (index - 1)) & 1u);
  }
  std::vector<unsigned> indices() const;

  friend constexpr bool operator==(Blade, Blade) = default;

private:
  std::uint64_t bits_ = 0;
};

constexpr unsigned grade_of(Blade b) { return static_cast<unsigned>(std::popcount(b.bits())); }

// Largest index in the blade, 0 for the scalar blade.
constexpr unsigned max_dimension(Blade b) {
  return b.is_scalar() ? 0u : 64u - static_cast<unsigned>(std::countl_zero(b.bits()));
}

// Grade first, then lexicographic comparison of the sorted index lists.
struct BladeOrder {
  constexpr bool operator()(Blade a, Blade b) const {
    unsigned ga = grade_of(a), gb = grade_of(b);
    if (ga != gb)
      return ga < gb;
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
      return false;
    // The lowest differing index belongs to the lexicographically smaller set.
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0;
  }
};

struct BladeProduct {
  int sign = 1;
  Blade blade;
  friend constexpr bool operator==(const BladeProduct &, const BladeProduct &) = default;
};

// Product of two canonical blades: the result is the symmetric difference,
// the sign collects one -1 for every pair (i from b, j from a, i < j) and
// the metric sign of each shared generator.
BladeProduct blade_product(Blade a, Blade b, Signature sig);

// Text form "e1e3e4" ("1" for the scalar blade), used in diagnostics.
std::string to_string(Blade b);

} // namespace clifford
