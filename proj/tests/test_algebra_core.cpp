#include "doctest.h"

#include "clifford/blade.hpp"
#include "clifford/error.hpp"
#include "support/oracles.hpp"

#include <array>
#include <bit>

using namespace clifford;

namespace {

const std::array<Signature, 4> kSignatures{Signature::threshold(0), Signature::threshold(2),
                                           Signature::threshold(4), Signature::euclidean()};

} // namespace

TEST_CASE("metric sign follows the threshold rule") {
  CHECK(metric_sign(1, Signature::threshold(2)) == 1);
  CHECK(metric_sign(3, Signature::threshold(2)) == -1);
  CHECK(metric_sign(5, Signature::euclidean()) == 1);
  CHECK(metric_sign(1, Signature::threshold(0)) == -1);
  CHECK_THROWS_AS(metric_sign(0, Signature::euclidean()), Error);
}

TEST_CASE("grade and max dimension") {
  CHECK(grade_of(Blade{}) == 0);
  CHECK(grade_of(Blade::from_indices({1, 3, 4})) == 3);
  CHECK(grade_of(Blade::from_indices({2})) == 1);
  CHECK(max_dimension(Blade::from_indices({1, 3, 4})) == 4);
  CHECK(max_dimension(Blade{}) == 0);
  CHECK(max_dimension(Blade::from_indices({7})) == 7);
}

TEST_CASE("blade construction rejects bad indices") {
  CHECK_THROWS_AS(Blade::generator(0), Error);
  CHECK_THROWS_AS(Blade::generator(65), Error);
  CHECK_NOTHROW(Blade::generator(64));
  CHECK_THROWS_AS(Blade::from_indices({2, 1}), Error);
  CHECK_THROWS_AS(Blade::from_indices({1, 1}), Error);
  CHECK(Blade::from_indices({1, 64}).indices() == std::vector<unsigned>{1, 64});
  try {
    Blade::generator(70);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("blade product examples") {
  auto e = [](std::initializer_list<unsigned> i) { return Blade::from_indices(i); };
  const Signature eu = Signature::euclidean();

  BladeProduct p = blade_product(e({1}), e({1}), eu);
  CHECK(p.sign == 1);
  CHECK(p.blade == Blade{});

  p = blade_product(e({2}), e({1}), eu);
  CHECK(p.sign == -1);
  CHECK(p.blade == e({1, 2}));

  p = blade_product(e({3}), e({3}), Signature::threshold(2));
  CHECK(p.sign == -1);
  CHECK(p.blade == Blade{});

  p = blade_product(e({1, 2}), e({3, 4}), eu);
  CHECK(p.sign == 1);
  CHECK(p.blade == e({1, 2, 3, 4}));

  // e1e2e3 squared is -1 in Euclidean space.
  p = blade_product(e({1, 2, 3}), e({1, 2, 3}), eu);
  CHECK(p.sign == -1);
  CHECK(p.blade == Blade{});

  // Indices near the top of the range.
  p = blade_product(e({64}), e({1, 63}), eu);
  CHECK(p.sign == 1);
  CHECK(p.blade == e({1, 63, 64}));
}

TEST_CASE("blade product agrees with the bubble-sort oracle for max index <= 8") {
  for (Signature sig : kSignatures) {
    CAPTURE(sig.to_string());
    std::size_t mismatches = 0;
    for (std::uint64_t a = 0; a < 256; ++a)
      for (std::uint64_t b = 0; b < 256; ++b) {
        BladeProduct got = blade_product(Blade(a), Blade(b), sig);
        oracle::SignedBlade want = oracle::bubble_product(Blade(a), Blade(b), sig);
        if (got.sign != want.sign || !(got.blade == want.blade))
          ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("blade product is associative for max index <= 5") {
  for (Signature sig : kSignatures) {
    CAPTURE(sig.to_string());
    std::size_t failures = 0;
    for (std::uint64_t a = 0; a < 32; ++a)
      for (std::uint64_t b = 0; b < 32; ++b)
        for (std::uint64_t c = 0; c < 32; ++c) {
          BladeProduct ab = blade_product(Blade(a), Blade(b), sig);
          BladeProduct left = blade_product(ab.blade, Blade(c), sig);
          BladeProduct bc = blade_product(Blade(b), Blade(c), sig);
          BladeProduct right = blade_product(Blade(a), bc.blade, sig);
          if (ab.sign * left.sign != bc.sign * right.sign || !(left.blade == right.blade))
            ++failures;
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("distinct generators anticommute") {
  for (Signature sig : kSignatures)
    for (unsigned i = 1; i <= 10; ++i)
      for (unsigned j = 1; j <= 10; ++j) {
        if (i == j)
          continue;
        BladeProduct ij = blade_product(Blade::generator(i), Blade::generator(j), sig);
        BladeProduct ji = blade_product(Blade::generator(j), Blade::generator(i), sig);
        CHECK(ij.blade == ji.blade);
        CHECK(ij.sign == -ji.sign);
      }
}

TEST_CASE("result grade is |a| + |b| - 2|a & b|") {
  for (std::uint64_t a = 0; a < 256; ++a)
    for (std::uint64_t b = 0; b < 256; b += 3) {
      BladeProduct p = blade_product(Blade(a), Blade(b), Signature::threshold(2));
      unsigned expected =
          std::popcount(a) + std::popcount(b) - 2 * static_cast<unsigned>(std::popcount(a & b));
      REQUIRE(grade_of(p.blade) == expected);
    }
}

TEST_CASE("blade order is grade first, then lexicographic") {
  auto e = [](std::initializer_list<unsigned> i) { return Blade::from_indices(i); };
  BladeOrder less;
  CHECK(less(Blade{}, e({5})));
  CHECK(less(e({3}), e({1, 2})));
  CHECK(less(e({1, 3}), e({2, 3})));
  CHECK(less(e({1, 2}), e({1, 3})));
  CHECK(less(e({1, 4}), e({2, 3})));
  CHECK_FALSE(less(e({2, 3}), e({1, 4})));
  CHECK(less(e({1, 2, 9}), e({1, 3, 4})));
}

TEST_CASE("blade text") {
  CHECK(to_string(Blade{}) == "1");
  CHECK(to_string(Blade::from_indices({1, 3})) == "e1e3");
}
