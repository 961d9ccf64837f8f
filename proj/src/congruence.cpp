#include "qcong/congruence.hpp"

#include <gmp.h>

#include <random>

#include "qcong/error.hpp"
#include "qcong/fp_poly.hpp"

namespace qcong {

RatFunc strip_phi(const RatFunc& a, unsigned p) {
  IntPoly num = a.num();
  IntPoly den = a.den();
  for (;;) {
    DivRem dq = divrem_qint(den, p);
    if (!dq.remainder.is_zero()) break;
    DivRem nq = divrem_qint(num, p);
    if (!nq.remainder.is_zero()) {
      throw Error(Errc::DenominatorNotCoprime, "[" + std::to_string(p) + "]_q divides the reduced denominator");
    }
    num = std::move(nq.quotient);
    den = std::move(dq.quotient);
  }
  return RatFunc(std::move(num), std::move(den));
}

Verdict check_congruence(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod) {
  const RatFunc a = strip_phi(lhs, mod.p);
  const RatFunc b = strip_phi(rhs, mod.p);

  IntPoly n;
  IntPoly d;
  if (a.den() == b.den()) {
    n = a.num() - b.num();
    d = a.den();
  } else {
    n = a.num() * b.den() - b.num() * a.den();
    d = a.den() * b.den();
  }

  // N = q_k [p]^k + r_1 + r_2 [p] + ... + r_k [p]^(k-1) by repeated division.
  std::vector<IntPoly> rems;
  rems.reserve(mod.k);
  IntPoly quot = std::move(n);
  for (unsigned i = 0; i < mod.k; ++i) {
    DivRem qr = divrem_qint(quot, mod.p);
    quot = std::move(qr.quotient);
    rems.push_back(std::move(qr.remainder));
  }

  Verdict v;
  unsigned valuation = 0;
  while (valuation < mod.k && rems[valuation].is_zero()) ++valuation;
  if (valuation == mod.k) {
    v.holds = true;
    v.witness = RatFunc(std::move(quot), std::move(d));
    return v;
  }
  const IntPoly base = q_int(mod.p);
  IntPoly remainder;
  for (unsigned i = mod.k; i-- > 0;) {
    remainder = remainder * base + rems[i];
  }
  v.failure = CongruenceFailure{std::move(remainder), valuation, "phi_p-adic valuation " + std::to_string(valuation) + " < " + std::to_string(mod.k)};
  return v;
}

bool check_identity(const RatFunc& lhs, const RatFunc& rhs) {
  if (lhs.den() == rhs.den()) return lhs.num() == rhs.num();
  return lhs.num() * rhs.den() == rhs.num() * lhs.den();
}

bool witness_sound(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod, const RatFunc& witness) {
  return check_identity(witness * RatFunc(mod.poly) + rhs, lhs);
}

RatFunc mutation_offset(const QModulus& mod) {
  return RatFunc(IntPoly{1, -1} * pow(q_int(mod.p), mod.k - 1));
}

bool classical_check(const Rational& lhs, const Rational& rhs, unsigned p, unsigned k) {
  const Integer prime(p);
  if (mpz_divisible_p(lhs.get_den_mpz_t(), prime.get_mpz_t()) ||
      mpz_divisible_p(rhs.get_den_mpz_t(), prime.get_mpz_t())) {
    throw Error(Errc::DenominatorDivisibleByP, "denominator divisible by " + std::to_string(p));
  }
  Rational diff = lhs - rhs;
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  return mpz_divisible_p(diff.get_num_mpz_t(), pk.get_mpz_t()) != 0;
}

bool q_limit_check(const RatFunc& statement_lhs, const RatFunc& statement_rhs,
                   const Rational& classical_lhs, const Rational& classical_rhs) {
  return eval_at(statement_lhs, Rational(1)) == classical_lhs &&
         eval_at(statement_rhs, Rational(1)) == classical_rhs;
}

bool modular_oracle(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod, std::uint64_t ell) {
  if (ell < 3 || ell >= (std::uint64_t{1} << 32) || !is_word_prime(ell)) {
    throw Error(Errc::BadOraclePrime, std::to_string(ell) + " is not a usable word-size prime");
  }
  const FpPoly dl = mod_prime_image(lhs.den(), ell);
  const FpPoly dr = mod_prime_image(rhs.den(), ell);
  if (dl.degree() != lhs.den().degree() || dr.degree() != rhs.den().degree()) {
    throw Error(Errc::BadOraclePrime, std::to_string(ell) + " divides a leading denominator coefficient");
  }
  const FpPoly phi = mod_prime_image(q_int(mod.p), ell);
  if ((dl.mod(phi) * dr.mod(phi)).mod(phi).is_zero()) {
    throw Error(Errc::BadOraclePrime, "denominators vanish modulo the image of [p]_q");
  }
  const FpPoly m = mod_prime_image(mod.poly, ell);
  const FpPoly nl = mod_prime_image(lhs.num(), ell).mod(m);
  const FpPoly nr = mod_prime_image(rhs.num(), ell).mod(m);
  const FpPoly n = (nl * dr.mod(m) - nr * dl.mod(m)).mod(m);
  return n.is_zero();
}

OracleReport oracle_cross_check(const RatFunc& lhs, const RatFunc& rhs, const QModulus& mod,
                                bool exact_holds, std::uint64_t seed, unsigned count) {
  constexpr unsigned kMaxDraws = 16;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 30, (std::uint64_t{1} << 31) - 1);
  OracleReport report;
  for (unsigned slot = 0; slot < count; ++slot) {
    bool done = false;
    for (unsigned draw = 0; draw < kMaxDraws && !done; ++draw) {
      mpz_class candidate(static_cast<unsigned long>(dist(rng)));
      mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
      const std::uint64_t ell = candidate.get_ui();
      try {
        const bool holds = modular_oracle(lhs, rhs, mod, ell);
        report.primes.push_back(ell);
        if (holds != exact_holds) report.agree = false;
        done = true;
      } catch (const Error& e) {
        if (e.code() != Errc::BadOraclePrime) throw;
      }
    }
    if (!done) throw Error(Errc::BadOraclePrime, "no admissible oracle prime after bounded retries");
  }
  return report;
}

}  // namespace qcong
