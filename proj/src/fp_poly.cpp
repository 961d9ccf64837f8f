#include "qcong/fp_poly.hpp"

#include <gmp.h>

#include <algorithm>

#include "qcong/error.hpp"

namespace qcong {

namespace {

void check_modulus(std::uint64_t ell) {
  if (ell < 2 || ell >= (std::uint64_t{1} << 32)) {
    throw Error(Errc::InvalidArgument, "field modulus must lie in [2, 2^32)");
  }
}

}  // namespace

FpPoly::FpPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : ell_(modulus), c_(std::move(coeffs)) {
  check_modulus(ell_);
  for (auto& v : c_) v %= ell_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Degree FpPoly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.ell_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t v = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
    r.c_[i] = v >= a.ell_ ? v - a.ell_ : v;
  }
  r.trim();
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.ell_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r.c_[i] = x >= y ? x - y : x + a.ell_ - y;
  }
  r.trim();
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.ell_);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % a.ell_;
    }
  }
  r.trim();
  return r;
}

FpPoly FpPoly::mod(const FpPoly& b) const {
  if (b.c_.empty() || b.c_.back() != 1) {
    throw Error(Errc::NonMonicDivisor, "F_l division needs a monic divisor");
  }
  FpPoly r = *this;
  const std::size_t nb = b.c_.size();
  if (r.c_.size() < nb) return r;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j + 1 < nb; ++j) {
    if (b.c_[j] != 0) support.push_back(j);
  }
  for (std::size_t i = r.c_.size(); i-- > nb - 1;) {
    const std::uint64_t qc = r.c_[i];
    if (qc == 0) continue;
    const std::size_t base = i - (nb - 1);
    const std::uint64_t neg = ell_ - qc;
    for (std::size_t j : support) {
      r.c_[base + j] = (r.c_[base + j] + neg * b.c_[j]) % ell_;
    }
    r.c_[i] = 0;
  }
  r.c_.resize(nb - 1);
  r.trim();
  return r;
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c_[i]);
  }
  return out;
}

FpPoly mod_prime_image(const IntPoly& a, std::uint64_t ell) {
  check_modulus(ell);
  std::vector<std::uint64_t> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(ell));
  }
  return FpPoly(ell, std::move(v));
}

bool is_word_prime(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

}  // namespace qcong
