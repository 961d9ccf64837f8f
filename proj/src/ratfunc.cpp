#include "qcong/ratfunc.hpp"

#include <utility>

#include "qcong/error.hpp"

namespace qcong {

namespace {

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  IntPoly r = a;
  r.divexact(a.content());
  if (sgn(r.lead()) < 0) r = -r;
  return r;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t nb = b.size();
  const Integer& lb = b.lead();
  while (r.size() >= nb) {
    const Integer top = r.back();
    const std::size_t shift = r.size() - nb;
    for (auto& v : r) v *= lb;
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZeroFunction, "zero denominator");
  if (sgn(den_.lead()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::constant(const Rational& c) {
  return RatFunc(IntPoly::constant(c.get_num()), IntPoly::constant(c.get_den()));
}

std::size_t RatFunc::combined_degree() const {
  return num_.degree().value_or(0) + den_.degree().value_or(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den() == b.den()) return RatFunc(a.num() + b.num(), a.den());
  if (a.den().is_constant() && b.den().is_constant()) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.den()[0].get_mpz_t(), b.den()[0].get_mpz_t());
    IntPoly n = a.num() * Integer(l / a.den()[0]);
    n.add_scaled(b.num(), l / b.den()[0]);
    return RatFunc(std::move(n), IntPoly::constant(l));
  }
  return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num(), a.den()); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroFunction, "division by the zero function");
  return RatFunc(a.num() * b.den(), a.den() * b.num());
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

RatFunc rf_normalize(const RatFunc& a) {
  if (a.is_zero()) return RatFunc();
  IntPoly g = poly_gcd(a.num(), a.den());
  IntPoly num = g.is_one() ? a.num() : exact_div(a.num(), g);
  IntPoly den = g.is_one() ? a.den() : exact_div(a.den(), g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  num.divexact(c);
  den.divexact(c);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc rf_normalize_above(const RatFunc& a, std::size_t threshold) {
  return a.combined_degree() > threshold ? rf_normalize(a) : a;
}

Rational eval_at(const IntPoly& a, const Rational& x) {
  if (a.is_zero()) return 0;
  const auto c = a.coeffs();
  if (x == 1) {
    Integer s;
    for (const auto& v : c) s += v;
    return Rational(s);
  }
  // Homogeneous Horner: sum c_i * num^i * den^(n-i), then divide by den^n.
  const Integer& xn = x.get_num();
  const Integer& xd = x.get_den();
  Integer acc = c.back();
  Integer dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= xn;
    dpow *= xd;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
  }
  Rational r(acc, dpow);
  r.canonicalize();
  return r;
}

Rational eval_at(const RatFunc& a, const Rational& x) {
  Rational d = eval_at(a.den(), x);
  if (d == 0) throw Error(Errc::PoleAtPoint, "denominator vanishes at " + x.get_str());
  return eval_at(a.num(), x) / d;
}

}  // namespace qcong
