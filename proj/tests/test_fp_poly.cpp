#include <doctest.h>

#include "gen.hpp"
#include "qcong/fp_poly.hpp"

using namespace qcong;

TEST_CASE("images modulo a prime") {
  CHECK(mod_prime_image(IntPoly{1, 3}, 3) == FpPoly(3, {1}));
  CHECK(mod_prime_image(IntPoly{1, 1, 1}, 5) == FpPoly(5, {1, 1, 1}));
  CHECK(mod_prime_image(IntPoly{-2, 0, 0, 7}, 7) == FpPoly(7, {5}));
  CHECK(*mod_prime_image(IntPoly{-2, 0, 0, 7}, 7).degree() == 0);
  CHECK(mod_prime_image(IntPoly{7, 14}, 7).is_zero());
}

TEST_CASE("remainder by a monic divisor") {
  const FpPoly a(11, {1, 0, 0, 1});
  const FpPoly b(11, {1, 1, 1});
  CHECK(a.mod(b) == FpPoly(11, {2}));
}

TEST_CASE("property: reduction mod a prime is a ring homomorphism") {
  qtest::Gen g(41);
  const std::uint64_t primes[] = {2, 3, 65537, 1000003, 2147483647ULL, 4294967291ULL};
  for (int it = 0; it < 200; ++it) {
    const std::uint64_t ell = primes[g.range(0, 5)];
    const IntPoly a = g.poly(30, 100), b = g.poly(30, 100);
    CHECK(mod_prime_image(a * b, ell) == mod_prime_image(a, ell) * mod_prime_image(b, ell));
    CHECK(mod_prime_image(a + b, ell) == mod_prime_image(a, ell) + mod_prime_image(b, ell));
    CHECK(mod_prime_image(a - b, ell) == mod_prime_image(a, ell) - mod_prime_image(b, ell));
  }
}

TEST_CASE("property: remainder commutes with reduction") {
  qtest::Gen g(42);
  for (int it = 0; it < 100; ++it) {
    const std::uint64_t ell = 1000003;
    const IntPoly a = g.poly(60, 80);
    const IntPoly b = g.monic(20, 40);
    const DivRem r = monic_divrem(a, b);
    CHECK(mod_prime_image(a, ell).mod(mod_prime_image(b, ell)) == mod_prime_image(r.remainder, ell));
  }
}

TEST_CASE("word primality") {
  CHECK(is_word_prime(2));
  CHECK(is_word_prime(65537));
  CHECK_FALSE(is_word_prime(1));
  CHECK_FALSE(is_word_prime(65535));
  CHECK(is_word_prime(4294967291ULL));
}
