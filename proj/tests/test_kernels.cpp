#include <doctest.h>

#include "gen.hpp"
#include "qcong/kernels.hpp"

using namespace qcong;
namespace k = qcong::kernels;

namespace {

k::Coeffs coeffs(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Trailing zeros are irrelevant for comparing coefficient vectors.
k::Coeffs trimmed(k::Coeffs v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("property: multiplication algorithms agree") {
  qtest::Gen g(21);
  for (int it = 0; it < 150; ++it) {
    const unsigned bits = static_cast<unsigned>(g.range(1, 400));
    const IntPoly a = g.poly(static_cast<std::size_t>(g.range(1, 160)), bits);
    const IntPoly b = g.poly(static_cast<std::size_t>(g.range(1, 160)), static_cast<unsigned>(g.range(1, 300)));
    const auto ref = trimmed(k::serial::mul_schoolbook(a.coeffs(), b.coeffs()));
    CHECK(trimmed(k::parallel::mul_schoolbook(a.coeffs(), b.coeffs())) == ref);
    CHECK(trimmed(k::mul_kronecker(a.coeffs(), b.coeffs())) == ref);
    CHECK(trimmed(k::multiply(a.coeffs(), b.coeffs())) == ref);
  }
}

TEST_CASE("kronecker handles extreme signs and lengths") {
  k::Coeffs a(300, Integer(-1));
  k::Coeffs b(257);
  const Integer big = Integer(1) << 200;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = (i % 2 == 0) ? big : Integer(-big);
  CHECK(k::mul_kronecker(a, b) == k::serial::mul_schoolbook(a, b));
  k::Coeffs one{Integer(1)};
  CHECK(trimmed(k::mul_kronecker(one, b)) == trimmed(b));
  CHECK(k::mul_kronecker({}, b).empty());
}

TEST_CASE("property: parallel division matches serial division") {
  qtest::Gen g(22);
  for (int it = 0; it < 60; ++it) {
    const IntPoly a = g.poly(900, 50);
    const IntPoly b = g.monic(static_cast<std::size_t>(g.range(1, 400)), 30);
    k::Coeffs r1 = coeffs(a), r2 = coeffs(a), q1, q2;
    k::serial::divrem_monic(r1, b.coeffs(), q1);
    k::parallel::divrem_monic(r2, b.coeffs(), q2);
    CHECK(trimmed(r1) == trimmed(r2));
    CHECK(trimmed(q1) == trimmed(q2));
  }
}
