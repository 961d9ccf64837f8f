#pragma once

// Dense univariate polynomials in q with arbitrary-precision integer
// coefficients. Index i of the coefficient vector holds the coefficient of q^i
// and the highest stored coefficient is never zero; the zero polynomial is the
// empty vector.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcong {

using Integer = mpz_class;

/// Degree of a polynomial. The zero polynomial has no degree: std::nullopt,
/// which orders below every natural number.
using Degree = std::optional<std::size_t>;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  /// 1 - c*q^d with c in {+1, -1}.
  static IntPoly binomial(std::size_t d, int c = 1);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;
  Degree degree() const noexcept;
  std::size_t size() const noexcept { return c_.size(); }

  /// Coefficient of q^i; zero beyond the stored range.
  const Integer& operator[](std::size_t i) const;
  const Integer& lead() const;
  std::span<const Integer> coeffs() const noexcept { return c_; }

  /// Moves the coefficient vector out, leaving the zero polynomial behind.
  std::vector<Integer> release() &&;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& s);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }

  /// Adds s * q^shift * other in place.
  IntPoly& add_scaled(const IntPoly& other, const Integer& s, std::size_t shift = 0);

  /// Multiplication by q^k.
  IntPoly shifted(std::size_t k) const;
  /// Exact division by q^k; throws InternalInconsistency if a low coefficient is nonzero.
  IntPoly unshifted(std::size_t k) const;
  /// In-place forms of negation, shifted() and unshifted().
  IntPoly& negate();
  IntPoly& shift_up(std::size_t k);
  IntPoly& shift_down(std::size_t k);
  void reserve(std::size_t n) { c_.reserve(n); }
  /// Substitution q -> q^s.
  IntPoly dilated(std::size_t s) const;

  /// In-place multiplication by (1 - c*q^d), c in {+1, -1}, d >= 1. O(size).
  IntPoly& mul_binomial(std::size_t d, int c = 1);
  /// In-place exact division by (1 - q^d), d >= 1. O(size). Throws
  /// InternalInconsistency when the division leaves a remainder.
  IntPoly& div_binomial(std::size_t d);

  /// Non-negative gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Divides every coefficient by s, which must divide each of them exactly.
  IntPoly& divexact(const Integer& s);

  /// Ascending coefficients separated by single spaces; "0" for zero.
  std::string to_string() const;
  /// Human rendering such as 1 + q + 2q^2.
  std::string pretty(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Euclidean division by a monic polynomial: a = quotient*b + remainder with
/// degree(remainder) < degree(b). Throws NonMonicDivisor unless lead(b) == 1.
DivRem monic_divrem(const IntPoly& a, const IntPoly& b);

/// Division by [n]_q = 1 + q + ... + q^(n-1), n >= 2, in O(size) operations.
/// Agrees with monic_divrem(a, q_int(n)).
DivRem divrem_qint(const IntPoly& a, std::size_t n);

/// Exact division over Z by an arbitrary nonzero divisor. Throws
/// InternalInconsistency if b does not divide a in Z[q].
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

}  // namespace qcong
