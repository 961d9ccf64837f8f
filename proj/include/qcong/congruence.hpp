#pragma once

// Deciding congruences modulo [p]_q^k between Phi_p-integral rational
// functions, exact identities, classical congruences modulo p^k, and the
// independent finite-field cross-check.
//
// A == B (mod [p]_q^k) means Phi_p^k divides the numerator of A - B once both
// sides are written with denominators coprime to Phi_p = [p]_q. Phi_p is
// irreducible over Q and monic, so divisibility is decided by exact division
// over Z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/poly.hpp"
#include "qcong/qkit.hpp"
#include "qcong/ratfunc.hpp"

namespace qcong {

struct CongruenceFailure {
  IntPoly remainder;       // N mod [p]_q^k
  unsigned valuation = 0;  // largest v < k with Phi_p^v | N
  std::string stage;
};

struct Verdict {
  bool holds = false;
  std::optional<RatFunc> witness;  // (lhs - rhs) / [p]_q^k when holds
  std::optional<CongruenceFailure> failure;
};

/// Cancels common Phi_p factors of numerator and denominator. Throws
/// DenominatorNotCoprime when Phi_p remains in the denominator.
RatFunc strip_phi(const RatFunc& a, unsigned p);

Verdict check_congruence(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod);

/// lhs == rhs as rational functions.
bool check_identity(const RatFunc& lhs, const RatFunc& rhs);

/// Re-derives lhs from witness * [p]_q^k + rhs.
bool witness_sound(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod, const RatFunc& witness);

/// (1 - q) [p]_q^(k-1): nonzero modulo [p]_q^k, used as a negative control.
RatFunc mutation_offset(const QModulus& mod);

/// p^k divides the reduced numerator of lhs - rhs. Throws
/// DenominatorDivisibleByP when either denominator is divisible by p.
bool classical_check(const Rational& lhs, const Rational& rhs, unsigned p, unsigned k);

/// The q -> 1 values of both sides reproduce the classical pair.
bool q_limit_check(const RatFunc& statement_lhs, const RatFunc& statement_rhs,
                   const Rational& classical_lhs, const Rational& classical_rhs);

/// The divisibility test carried out in F_ell[q]. Throws BadOraclePrime when
/// ell is not prime, divides a leading denominator coefficient, or the
/// denominator product vanishes modulo the image of [p]_q.
bool modular_oracle(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod, std::uint64_t ell);

struct OracleReport {
  bool agree = true;
  std::vector<std::uint64_t> primes;
};

/// Runs modular_oracle for `count` random admissible primes in [2^30, 2^31)
/// drawn from `seed`, retrying inadmissible draws a bounded number of times.
OracleReport oracle_cross_check(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod,
                                bool exact_holds, std::uint64_t seed, unsigned count = 3);

}  // namespace qcong
