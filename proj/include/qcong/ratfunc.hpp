#pragma once

// Fractions of integer polynomials and exact rational evaluation.
//
// RatFunc keeps its denominator nonzero with a positive leading coefficient.
// Arithmetic never reduces to lowest terms on its own; rf_normalize does.

#include <gmpxx.h>

#include <cstddef>

#include "qcong/poly.hpp"

namespace qcong {

/// Reduced fraction with positive denominator (GMP canonical form).
using Rational = mpq_class;

class RatFunc {
 public:
  RatFunc() : den_(IntPoly::constant(1)) {}
  /// Throws DivisionByZeroFunction when den is zero.
  RatFunc(IntPoly num, IntPoly den);
  RatFunc(IntPoly num) : num_(std::move(num)), den_(IntPoly::constant(1)) {}  // NOLINT

  static RatFunc constant(const Rational& c);

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Sum of numerator and denominator degrees (zero numerator counts as 0).
  std::size_t combined_degree() const;

 private:
  IntPoly num_;
  IntPoly den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
/// Throws DivisionByZeroFunction when b is zero.
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a);

/// Lowest-terms representative: gcd over Q divided out, joint integer content
/// removed, positive leading denominator coefficient. Idempotent.
RatFunc rf_normalize(const RatFunc& a);

/// rf_normalize when combined_degree exceeds threshold, otherwise a copy.
RatFunc rf_normalize_above(const RatFunc& a, std::size_t threshold);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

Rational eval_at(const IntPoly& a, const Rational& x);
/// Throws PoleAtPoint when the denominator vanishes at x.
Rational eval_at(const RatFunc& a, const Rational& x);

}  // namespace qcong
