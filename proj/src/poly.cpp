#include "qcong/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qcong/error.hpp"
#include "qcong/kernels.hpp"

namespace qcong {

namespace {
const Integer kZero;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  if (sgn(c) == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t d, int c) {
  if (d == 0) return constant(1 - c);
  std::vector<Integer> v(d + 1);
  v[0] = 1;
  v[d] = -c;
  return IntPoly(std::move(v));
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Degree IntPoly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

const Integer& IntPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Integer& IntPoly::lead() const { return c_.empty() ? kZero : c_.back(); }

std::vector<Integer> IntPoly::release() && { return std::move(c_); }

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::add_scaled(const IntPoly& other, const Integer& s, std::size_t shift) {
  if (other.is_zero() || sgn(s) == 0) return *this;
  if (c_.size() < other.c_.size() + shift) c_.resize(other.c_.size() + shift);
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    mpz_addmul(c_[i + shift].get_mpz_t(), other.c_[i].get_mpz_t(), s.get_mpz_t());
  }
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  return IntPoly(kernels::multiply(a.c_, b.c_));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Integer& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  if (s == 1) return *this;
  for (auto& v : c_) v *= s;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  return r.negate();
}

IntPoly& IntPoly::negate() {
  for (auto& v : c_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  return *this;
}

IntPoly& IntPoly::shift_up(std::size_t k) {
  if (is_zero() || k == 0) return *this;
  const std::size_t n = c_.size();
  c_.resize(n + k);
  std::move_backward(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end());
  for (std::size_t i = 0; i < k; ++i) c_[i] = 0;
  return *this;
}

IntPoly& IntPoly::shift_down(std::size_t k) {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
    if (sgn(c_[i]) != 0) throw Error(Errc::InternalInconsistency, "division by q^k is not exact");
  }
  std::move(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end(), c_.begin());
  c_.resize(c_.size() - k);
  return *this;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(c_.size() + k);
  std::copy(c_.begin(), c_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  IntPoly r;
  r.c_ = std::move(v);
  return r;
}

IntPoly IntPoly::unshifted(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
    if (sgn(c_[i]) != 0) throw Error(Errc::InternalInconsistency, "division by q^k is not exact");
  }
  IntPoly r;
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

IntPoly IntPoly::dilated(std::size_t s) const {
  if (s == 0) throw Error(Errc::InvalidArgument, "dilation factor must be positive");
  if (s == 1 || c_.size() <= 1) return *this;
  std::vector<Integer> v((c_.size() - 1) * s + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
  IntPoly r;
  r.c_ = std::move(v);
  return r;
}

IntPoly& IntPoly::mul_binomial(std::size_t d, int c) {
  if (d == 0) throw Error(Errc::InvalidArgument, "binomial exponent must be positive");
  if (is_zero()) return *this;
  const std::size_t n = c_.size();
  c_.resize(n + d);
  for (std::size_t i = n + d; i-- > d;) {
    if (c > 0) {
      c_[i] -= c_[i - d];
    } else {
      c_[i] += c_[i - d];
    }
  }
  trim();
  return *this;
}

IntPoly& IntPoly::div_binomial(std::size_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "binomial exponent must be positive");
  if (is_zero()) return *this;
  if (c_.size() <= d) throw Error(Errc::InternalInconsistency, "division by (1 - q^d) is not exact");
  // a = r * (1 - q^d): r_i = a_i + r_{i-d}; the top d coefficients of a must
  // then equal -r_{i-d}.
  const std::size_t n = c_.size() - d;
  for (std::size_t i = d; i < n; ++i) c_[i] += c_[i - d];
  for (std::size_t i = n; i < c_.size(); ++i) {
    const bool exact = i >= d ? c_[i] + c_[i - d] == 0 : c_[i] == 0;
    if (!exact) {
      throw Error(Errc::InternalInconsistency, "division by (1 - q^d) is not exact");
    }
  }
  c_.resize(n);
  trim();
  return *this;
}

Integer IntPoly::content() const {
  Integer g;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly& IntPoly::divexact(const Integer& s) {
  if (s == 1) return *this;
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  return *this;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += c_[i].get_str();
  }
  return out;
}

std::string IntPoly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Integer mag = abs(c_[i]);
    if (first) {
      if (sgn(c_[i]) < 0) os << '-';
    } else {
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

DivRem monic_divrem(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw Error(Errc::NonMonicDivisor, "divisor must have leading coefficient 1");
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> quot;
  kernels::serial::divrem_monic(rem, b.coeffs(), quot);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

DivRem divrem_qint(const IntPoly& a, std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "divrem_qint needs n >= 2");
  if (a.is_zero()) return {};
  // a*(1-q) = Q'*(q^n - 1) + R'  =>  a = -Q'*[n]_q + R'/(1-q).
  std::vector<Integer> r(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + 1] -= a[i];
  }
  std::vector<Integer> quot;
  if (r.size() > n) {
    quot.resize(r.size() - n);
    for (std::size_t i = r.size(); i-- > n;) {
      if (sgn(r[i]) == 0) continue;
      r[i - n] += r[i];
      mpz_neg(quot[i - n].get_mpz_t(), r[i].get_mpz_t());
      r[i] = 0;
    }
    r.resize(n);
  }
  // Prefix sums divide R' by (1 - q); R'(1) = 0 so the top one cancels.
  for (std::size_t i = 1; i < r.size(); ++i) r[i] += r[i - 1];
  if (sgn(r.back()) != 0) throw Error(Errc::InternalInconsistency, "divrem_qint lost exactness");
  r.pop_back();
  return {IntPoly(std::move(quot)), IntPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroFunction, "exact_div by zero polynomial");
  if (a.is_zero()) return {};
  if (a.size() < b.size()) throw Error(Errc::InternalInconsistency, "exact_div: divisor degree too large");
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t nb = b.size();
  std::vector<Integer> quot(rem.size() - nb + 1);
  const Integer& lb = b.lead();
  for (std::size_t i = rem.size(); i-- > nb - 1;) {
    if (sgn(rem[i]) == 0) continue;
    const std::size_t base = i - (nb - 1);
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) {
      throw Error(Errc::InternalInconsistency, "exact_div: not divisible over Z");
    }
    mpz_divexact(quot[base].get_mpz_t(), rem[i].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j + 1 < nb; ++j) {
      mpz_submul(rem[base + j].get_mpz_t(), quot[base].get_mpz_t(), b[j].get_mpz_t());
    }
    rem[i] = 0;
  }
  for (std::size_t i = 0; i + 1 < nb && i < rem.size(); ++i) {
    if (sgn(rem[i]) != 0) throw Error(Errc::InternalInconsistency, "exact_div: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

}  // namespace qcong
