#include <doctest.h>

#include <limits>
#include <random>

#include "iecancel/errors.hpp"
#include "iecancel/polynomial.hpp"
#include "support/random_instances.hpp"

using namespace iecancel;

namespace {

// x^6 - 4x^4 + 3x^3 + x^2 - x, lowest degree first.
const IntPolynomial kChiH{0, -1, 1, 3, -4, 0, 1};

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<std::int64_t> c(-50, 50);
  std::vector<std::int64_t> v(static_cast<std::size_t>(len(rng)));
  for (auto& x : v) x = c(rng);
  return IntPolynomial(v);
}

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(IntPolynomial{1, 2, 0, 0}.coeffs() == std::vector<std::int64_t>{1, 2});
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(kChiH.degree() == 6);
}

TEST_CASE("add") {
  CHECK(add(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1, -1}) == IntPolynomial{1, 1});
  CHECK(add(kChiH, IntPolynomial{}) == kChiH);
  const IntPolynomial high{0, 0, 0, 0, -4, 0, 1};
  const IntPolynomial low{0, -1, 1, 3};
  CHECK(add(high, low) == kChiH);
}

TEST_CASE("add fails loudly on overflow") {
  const auto big = IntPolynomial::constant(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(add(big, IntPolynomial{1}), OverflowError);
}

TEST_CASE("scale_signed") {
  CHECK(scale_signed(IntPolynomial{0, 1, 1}, -1) == IntPolynomial{0, -1, -1});
  CHECK(scale_signed(IntPolynomial{}, -1).is_zero());
  CHECK(scale_signed(IntPolynomial::monomial(6), 1) == IntPolynomial::monomial(6));
  CHECK_THROWS_AS(scale_signed(kChiH, 2), DomainError);
}

TEST_CASE("monomial_times_binomial") {
  CHECK(monomial_times_binomial(0, 2) == IntPolynomial{1, 2, 1});
  CHECK(monomial_times_binomial(1, 0) == IntPolynomial{0, 1});
  // Oracle: convolve (1+x) three times, then shift by x^2.
  IntPolynomial expected{1};
  for (int i = 0; i < 3; ++i) expected = testing::convolve(expected, IntPolynomial{1, 1});
  expected = testing::convolve(expected, IntPolynomial::monomial(2));
  CHECK(expected == IntPolynomial{0, 0, 1, 3, 3, 1});
  CHECK(monomial_times_binomial(2, 3) == expected);
}

TEST_CASE("monomial_times_binomial overflows for huge exponents") {
  CHECK_THROWS_AS(monomial_times_binomial(0, 80), OverflowError);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(kChiH, 0) == 0);
  CHECK(eval_at(kChiH, 1) == 0);
  CHECK(eval_at(IntPolynomial{}, 5) == 0);
  CHECK(eval_at(kChiH, 2) == 26);
  CHECK_THROWS_AS(eval_at(IntPolynomial::monomial(5), 1'000'000), OverflowError);
}

TEST_CASE("rendering") {
  CHECK(to_string(kChiH) == "x^6 - 4x^4 + 3x^3 + x^2 - x");
  CHECK(to_coeff_list(kChiH) == "[0, -1, 1, 3, -4, 0, 1]");
  CHECK(to_string(IntPolynomial{}) == "0");
  CHECK(to_coeff_list(IntPolynomial{}) == "[]");
  CHECK(to_string(IntPolynomial{-1}) == "-1");
  CHECK(to_string(IntPolynomial{1, 5, 6, 1}) == "x^3 + 6x^2 + 5x + 1");
  CHECK(to_string(IntPolynomial{0, 0, -2}) == "-2x^2");
}

TEST_CASE("property: add is commutative and associative, eval is additive") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> point(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(add(p, q) == add(q, p));
    CHECK(add(add(p, q), r) == add(p, add(q, r)));
    const auto k = point(rng);
    CHECK(eval_at(add(p, q), k) == eval_at(p, k) + eval_at(q, k));
  }
}

TEST_CASE("property: binomial expansion coefficients") {
  for (std::size_t a = 0; a <= 5; ++a) {
    for (std::size_t b = 0; b <= 20; ++b) {
      const auto p = monomial_times_binomial(a, b);
      REQUIRE(p.degree() == static_cast<int>(a + b));
      for (std::size_t i = 0; i < a; ++i) CHECK(p.coeff(i) == 0);
      for (std::size_t j = 0; j <= b; ++j) {
        CHECK(p.coeff(a + j) == static_cast<std::int64_t>(testing::binomial(b, j)));
      }
    }
  }
}
