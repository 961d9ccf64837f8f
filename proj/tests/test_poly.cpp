#include <doctest.h>

#include "gen.hpp"
#include "qcong/error.hpp"
#include "qcong/poly.hpp"

using namespace qcong;

namespace {

// Long division written the obvious way, used as an oracle.
DivRem naive_divrem(IntPoly a, const IntPoly& b) {
  IntPoly q;
  const std::size_t db = *b.degree();
  while (!a.is_zero() && *a.degree() >= db) {
    const std::size_t shift = *a.degree() - db;
    const Integer c = a.lead();
    q += IntPoly::monomial(c, shift);
    a.add_scaled(b, -c, shift);
  }
  return {q, a};
}

}  // namespace

TEST_CASE("ring arithmetic on small examples") {
  CHECK(IntPoly{1, 1} + IntPoly{1, -1} == IntPoly{2});
  CHECK(IntPoly{1, -1} * IntPoly{1, 1} == IntPoly{1, 0, -1});
  CHECK(IntPoly{1, 1, 1} * IntPoly{1, -1} == IntPoly{1, 0, 0, -1});
  CHECK((IntPoly{3, 0, 2} * Integer(-2)) == IntPoly{-6, 0, -4});
  CHECK(-IntPoly{1, -2} == IntPoly{-1, 2});
}

TEST_CASE("zero polynomial has no degree") {
  IntPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(*IntPoly{5}.degree() == 0);
  CHECK((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
  CHECK(IntPoly{1, 2, 0, 0}.size() == 2);
}

TEST_CASE("monic division examples") {
  auto r = monic_divrem(IntPoly{1, 0, 0, 1}, IntPoly{1, 1, 1});
  CHECK(r.quotient == IntPoly{-1, 1});
  CHECK(r.remainder == IntPoly{2});

  r = monic_divrem(IntPoly{1, 0, 0, -1}, IntPoly{1, 1, 1});
  CHECK(r.quotient == IntPoly{1, -1});
  CHECK(r.remainder.is_zero());

  r = monic_divrem(IntPoly{}, IntPoly{7, 1});
  CHECK(r.quotient.is_zero());
  CHECK(r.remainder.is_zero());

  CHECK_THROWS_AS(monic_divrem(IntPoly{1, 2}, IntPoly{1, 2}), Error);
  try {
    monic_divrem(IntPoly{1, 2}, IntPoly{1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonMonicDivisor);
  }
}

TEST_CASE("property: ring axioms") {
  qtest::Gen g(11);
  for (int it = 0; it < 200; ++it) {
    const IntPoly a = g.poly(40, 90), b = g.poly(40, 90), c = g.poly(40, 90);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly{});
  }
}

TEST_CASE("property: monic division round trip") {
  qtest::Gen g(12);
  for (int it = 0; it < 300; ++it) {
    const IntPoly a = g.poly(80, 70);
    const IntPoly b = g.monic(30, 40);
    const DivRem r = monic_divrem(a, b);
    CHECK(r.quotient * b + r.remainder == a);
    if (!r.remainder.is_zero()) CHECK(*r.remainder.degree() < *b.degree());
    const DivRem n = naive_divrem(a, b);
    CHECK(n.quotient == r.quotient);
    CHECK(n.remainder == r.remainder);
  }
}

TEST_CASE("property: division by [n]_q matches generic division") {
  qtest::Gen g(13);
  for (int it = 0; it < 300; ++it) {
    const IntPoly a = g.poly(120, 60);
    const auto n = static_cast<std::size_t>(g.range(2, 40));
    std::vector<Integer> ones(n, 1);
    const IntPoly qn(ones);
    const DivRem fast = divrem_qint(a, n);
    const DivRem slow = monic_divrem(a, qn);
    CHECK(fast.quotient == slow.quotient);
    CHECK(fast.remainder == slow.remainder);
  }
}

TEST_CASE("binomial helpers") {
  IntPoly a{1, 2, 3};
  IntPoly b = a;
  b.mul_binomial(3);
  CHECK(b == a * IntPoly{1, 0, 0, -1});
  b.div_binomial(3);
  CHECK(b == a);
  b.mul_binomial(2, -1);
  CHECK(b == a * IntPoly{1, 0, 1});

  IntPoly c{1, 1};
  CHECK_THROWS_AS(c.div_binomial(1), Error);
  IntPoly d{1, 0, 0, 0, -1};
  d.div_binomial(4);
  CHECK(d == IntPoly{1});

  qtest::Gen g(14);
  for (int it = 0; it < 200; ++it) {
    const IntPoly p = g.poly(50, 50);
    const auto k = static_cast<std::size_t>(g.range(1, 30));
    IntPoly t = p;
    t.mul_binomial(k);
    CHECK(t == p * IntPoly::binomial(k));
    t.div_binomial(k);
    CHECK(t == p);
  }
}

TEST_CASE("shifts and dilation") {
  const IntPoly a{1, -2, 3};
  CHECK(a.shifted(2) == IntPoly{0, 0, 1, -2, 3});
  CHECK(a.shifted(2).unshifted(2) == a);
  CHECK_THROWS_AS(a.unshifted(1), Error);
  IntPoly b = a;
  b.shift_up(3).shift_down(1);
  CHECK(b == a.shifted(2));
  CHECK(a.dilated(3) == IntPoly{1, 0, 0, -2, 0, 0, 3});
  CHECK(IntPoly{}.shifted(4).is_zero());
}

TEST_CASE("exact division over the integers") {
  qtest::Gen g(15);
  for (int it = 0; it < 100; ++it) {
    const IntPoly a = g.nonzero_poly(30, 40);
    const IntPoly b = g.nonzero_poly(20, 40);
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1}), Error);
}

TEST_CASE("content, pow and rendering") {
  CHECK(IntPoly{6, -4, 10}.content() == 2);
  CHECK(IntPoly{}.content() == 0);
  CHECK(pow(IntPoly{1, 1}, 3) == IntPoly{1, 3, 3, 1});
  CHECK(pow(IntPoly{1, 1}, 0) == IntPoly{1});
  CHECK(IntPoly{1, 1, 2, 1, 1}.to_string() == "1 1 2 1 1");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{1, 1, 2}.pretty() == "1 + q + 2q^2");
  CHECK(IntPoly{0, 1}.pretty() == "q");
  CHECK(IntPoly{0, -1, 0, -3}.pretty() == "-q - 3q^3");
}
