#pragma once

// Polynomials over the prime field F_l for word-size primes l < 2^32. Used as
// the independent finite-field route for checking congruence verdicts.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcong/poly.hpp"

namespace qcong {

class FpPoly {
 public:
  explicit FpPoly(std::uint64_t modulus) : ell_(modulus) {}
  FpPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

  std::uint64_t modulus() const noexcept { return ell_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const noexcept;
  std::uint64_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);

  /// Remainder modulo a monic divisor.
  FpPoly mod(const FpPoly& monic_divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::uint64_t ell_;
  std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction of an integer polynomial into F_l (l prime,
/// 2 <= l < 2^32). The degree drops when leading coefficients vanish mod l.
FpPoly mod_prime_image(const IntPoly& a, std::uint64_t ell);

bool is_word_prime(std::uint64_t n);

}  // namespace qcong
