#include "clifford/blade.hpp"

#include "clifford/error.hpp"

namespace clifford {

std::string Signature::to_string() const {
  return is_euclidean() ? std::string("euclidean") : "p=" + std::to_string(*p_);
}

int metric_sign(unsigned index, Signature sig) {
  if (index == 0)
    throw Error(ErrorKind::IndexOutOfRange, "generator indices start at 1");
  if (sig.is_euclidean())
    return 1;
  return index <= *sig.p() ? 1 : -1;
}

Blade Blade::generator(unsigned index) {
  if (index == 0 || index > kMaxIndex)
    throw Error(ErrorKind::IndexOutOfRange,
                "generator index " + std::to_string(index) + " outside 1..64");
  return Blade(std::uint64_t{1} << (index - 1));
}

Blade Blade::from_indices(std::span<const unsigned> indices) {
  std::uint64_t bits = 0;
  unsigned previous = 0;
  for (unsigned i : indices) {
    if (i <= previous)
      throw Error(ErrorKind::IndexOutOfRange, "blade indices must be strictly increasing");
    bits |= generator(i).bits();
    previous = i;
  }
  return Blade(bits);
}

std::vector<unsigned> Blade::indices() const {
  std::vector<unsigned> out;
  out.reserve(grade_of(*this));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<unsigned>(std::countr_zero(rest)) + 1);
  return out;
}

BladeProduct blade_product(Blade a, Blade b, Signature sig) {
  unsigned swaps = 0;
  // Each generator i of b has to move left past every generator of a above it.
  for (std::uint64_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    swaps += static_cast<unsigned>(std::popcount(a.bits() & above));
  }
  int sign = (swaps & 1u) ? -1 : 1;
  if (!sig.is_euclidean()) {
    std::uint64_t shared = a.bits() & b.bits();
    unsigned p = *sig.p();
    std::uint64_t negative = p >= 64 ? 0 : (~std::uint64_t{0} << p);
    if (std::popcount(shared & negative) & 1)
      sign = -sign;
  }
  return {sign, Blade(a.bits() ^ b.bits())};
}

std::string to_string(Blade b) {
  if (b.is_scalar())
    return "1";
  std::string out;
  for (unsigned i : b.indices())
    out += "e" + std::to_string(i);
  return out;
}

} // namespace clifford
