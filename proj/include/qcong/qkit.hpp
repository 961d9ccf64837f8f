#pragma once

// Constructors for q-objects: q-integers, q-Pochhammer products, Gaussian
// binomials in any base q^s, powers of [p]_q, q-Fermat quotients, and the
// closed family of harmonic-type sums.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qcong/poly.hpp"
#include "qcong/ratfunc.hpp"

namespace qcong {

bool is_prime(std::uint64_t n);
int mobius(std::uint64_t n);

/// [n]_q = 1 + q + ... + q^(n-1); q_int(0) = 0.
IntPoly q_int(std::size_t n);

/// prod_{j=0}^{length-1} (1 - sign * q^(offset + j*step)).
struct PochSpec {
  int sign = 1;  // c in {+1, -1}
  std::size_t offset = 1;
  std::size_t step = 1;
  std::size_t length = 0;
};

IntPoly q_poch(const PochSpec& spec);

/// (q;q)_n, (q^m;q^m)_n and (-q;q)_n.
IntPoly q_factorial_poch(std::size_t n);
IntPoly q_poch_base(std::size_t m, std::size_t n);
IntPoly neg_q_poch(std::size_t n);

/// Product of (1 - q^d)^e over a finite exponent map. Negative exponents are
/// allowed as long as the total is a polynomial; expansion multiplies all
/// positive factors first and then divides exactly.
class FactorProduct {
 public:
  FactorProduct& times_binomial(std::size_t d, long e = 1);
  /// Multiplies by Phi_n(q)^mult for n >= 2.
  FactorProduct& times_cyclotomic(std::size_t n, long mult = 1);
  /// Multiplies by [n]_q^mult.
  FactorProduct& times_qint(std::size_t n, long mult = 1);

  const std::map<std::size_t, long>& exponents() const noexcept { return exps_; }
  /// Throws InternalInconsistency when the product is not a polynomial.
  IntPoly expand() const;

 private:
  std::map<std::size_t, long> exps_;
};

/// Phi_n(q) for n >= 1 (Phi_1 = q - 1).
IntPoly cyclotomic(std::size_t n);

enum class BinomAlgorithm {
  recurrence,     // [n+1, m] = q^m [n, m] + [n, m-1], then q -> q^s
  quotient,       // prod [n-m+j]_{q^s} divided by each [j]_{q^s}, remainders asserted zero
  cross_checked,  // both; InternalInconsistency on disagreement
};

/// Gaussian binomial [n, m] in the variable q^s. Zero when m < 0 or n < m.
IntPoly q_binom(long n, long m, std::size_t s = 1, BinomAlgorithm alg = BinomAlgorithm::recurrence);

/// Row [n, 0..n] in base q by successive exact ratios
/// [n, k] = [n, k-1] (1 - q^(n-k+1)) / (1 - q^k).
std::vector<IntPoly> q_binom_row(std::size_t n);

/// The modulus [p]_q^k.
struct QModulus {
  unsigned p = 0;
  unsigned k = 0;
  IntPoly poly;

  std::size_t degree() const { return static_cast<std::size_t>(k) * (p - 1); }
};

/// Throws InvalidPrime unless p is an odd prime; InvalidArgument when k == 0.
QModulus q_modulus(unsigned p, unsigned k);

/// Q_p(m, q) = ((q^m;q^m)_{p-1}/(q;q)_{p-1} - 1)/[p]_q. The division by [p]_q
/// is exact (q-Fermat little theorem) and asserted; the result is returned as
/// a polynomial fraction.
RatFunc q_fermat_quotient(unsigned p, unsigned m);

/// (q^m;q^m)_{p-1}/(q;q)_{p-1} expanded as a polynomial (it equals
/// prod_j [m]_{q^j}).
IntPoly fermat_ratio(unsigned p, unsigned m);

enum class SumRange { full, half };  // 1..p-1 or 1..(p-1)/2
enum class SumWeight { unit, floor_jm_over_p, neg_q_poch };

/// sum_j (-1)^(j if alternating) * weight_j * q^(alpha*j) / [beta*j]_q^d
struct SumSpec {
  unsigned p = 3;
  SumRange range = SumRange::full;
  unsigned beta = 1;
  unsigned power = 1;
  unsigned alpha = 0;
  bool alternating = false;
  SumWeight weight = SumWeight::unit;
  unsigned m = 0;  // for floor_jm_over_p
};

/// Exact value of the sum over the lcm of its denominators. Terms are formed
/// independently (OpenMP when available) except for the Pochhammer weight,
/// which steps by exact term ratios.
RatFunc q_sum(const SumSpec& spec);

namespace serial {
RatFunc q_sum(const SumSpec& spec);
}

/// sum_{1 <= j < k <= p-1} (-1)^k / ([j]_q [k]_q)
RatFunc q_ordered_pair_sum(unsigned p);

/// M = m * sum_{k=1}^{m-1} C(floor(kp/m) + 1, 2).
std::uint64_t granville_exponent(unsigned p, unsigned m);

}  // namespace qcong
