#include "qcong/qkit.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <utility>

#include "qcong/error.hpp"

namespace qcong {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "mobius(0)");
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly q_int(std::size_t n) {
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

IntPoly q_poch(const PochSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1) throw Error(Errc::InvalidArgument, "Pochhammer sign must be +1 or -1");
  if (spec.step == 0) throw Error(Errc::InvalidArgument, "Pochhammer step must be positive");
  IntPoly r = IntPoly::constant(1);
  for (std::size_t j = 0; j < spec.length; ++j) {
    const std::size_t d = spec.offset + j * spec.step;
    if (d == 0) {
      r *= Integer(1 - spec.sign);
      if (r.is_zero()) return r;
    } else {
      r.mul_binomial(d, spec.sign);
    }
  }
  return r;
}

IntPoly q_factorial_poch(std::size_t n) { return q_poch({1, 1, 1, n}); }
IntPoly q_poch_base(std::size_t m, std::size_t n) { return q_poch({1, m, m, n}); }
IntPoly neg_q_poch(std::size_t n) { return q_poch({-1, 1, 1, n}); }

FactorProduct& FactorProduct::times_binomial(std::size_t d, long e) {
  if (d == 0) throw Error(Errc::InvalidArgument, "binomial factor needs d >= 1");
  if (e == 0) return *this;
  long& slot = exps_[d];
  slot += e;
  if (slot == 0) exps_.erase(d);
  return *this;
}

FactorProduct& FactorProduct::times_cyclotomic(std::size_t n, long mult) {
  if (n < 2) throw Error(Errc::InvalidArgument, "times_cyclotomic needs n >= 2");
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    times_binomial(d, mobius(n / d) * mult);
    if (d * d != n) times_binomial(n / d, mobius(d) * mult);
  }
  return *this;
}

FactorProduct& FactorProduct::times_qint(std::size_t n, long mult) {
  if (n == 0) throw Error(Errc::InvalidArgument, "[0]_q is zero");
  if (n == 1) return *this;
  times_binomial(n, mult);
  return times_binomial(1, -mult);
}

IntPoly FactorProduct::expand() const {
  IntPoly r = IntPoly::constant(1);
  for (const auto& [d, e] : exps_) {
    for (long i = 0; i < e; ++i) r.mul_binomial(d);
  }
  for (const auto& [d, e] : exps_) {
    for (long i = 0; i < -e; ++i) r.div_binomial(d);
  }
  return r;
}

IntPoly cyclotomic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "Phi_0 is undefined");
  if (n == 1) return IntPoly{-1, 1};
  return FactorProduct().times_cyclotomic(n).expand();
}

namespace {

IntPoly binom_recurrence(long n, long m) {
  m = std::min(m, n - m);
  std::vector<IntPoly> row(static_cast<std::size_t>(m) + 1);
  row[0] = IntPoly::constant(1);
  for (long t = 0; t < n; ++t) {
    for (long j = std::min(t + 1, m); j >= 1; --j) {
      row[j].shift_up(static_cast<std::size_t>(j));
      row[j] += row[j - 1];
    }
  }
  return std::move(row[m]);
}

IntPoly binom_quotient(long n, long m, std::size_t s) {
  const long k = std::min(m, n - m);
  // After step j the running value is the binomial [n-k+j, j], so each division is exact.
  IntPoly num = IntPoly::constant(1);
  for (long j = 1; j <= k; ++j) {
    num.mul_binomial(static_cast<std::size_t>(n - k + j) * s);
    num.div_binomial(s);
    if (j < 2) continue;
    DivRem qr = monic_divrem(num, q_int(static_cast<std::size_t>(j)).dilated(s));
    if (!qr.remainder.is_zero()) {
      throw Error(Errc::InternalInconsistency, "q-factorial quotient left a remainder");
    }
    num = std::move(qr.quotient);
  }
  return num;
}

}  // namespace

IntPoly q_binom(long n, long m, std::size_t s, BinomAlgorithm alg) {
  if (s == 0) throw Error(Errc::InvalidArgument, "q_binom base exponent must be positive");
  if (m < 0 || n < m) return {};
  switch (alg) {
    case BinomAlgorithm::recurrence:
      return binom_recurrence(n, m).dilated(s);
    case BinomAlgorithm::quotient:
      return binom_quotient(n, m, s);
    case BinomAlgorithm::cross_checked: {
      IntPoly a = binom_recurrence(n, m).dilated(s);
      if (a != binom_quotient(n, m, s)) {
        throw Error(Errc::InternalInconsistency, "q_binom recurrence and quotient disagree");
      }
      return a;
    }
  }
  return {};
}

std::vector<IntPoly> q_binom_row(std::size_t n) {
  std::vector<IntPoly> row(n + 1);
  row[0] = IntPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1];
    row[k].mul_binomial(n - k + 1);
    row[k].div_binomial(k);
  }
  return row;
}

QModulus q_modulus(unsigned p, unsigned k) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
  if (k == 0) throw Error(Errc::InvalidArgument, "modulus exponent must be positive");
  return {p, k, pow(q_int(p), k)};
}

IntPoly fermat_ratio(unsigned p, unsigned m) {
  FactorProduct f;
  for (std::size_t j = 1; j < p; ++j) {
    f.times_binomial(j * m, 1);
    f.times_binomial(j, -1);
  }
  return f.expand();
}

RatFunc q_fermat_quotient(unsigned p, unsigned m) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "q-Fermat quotient needs m >= 1");
  if (m % p == 0) throw Error(Errc::PrimeDividesBase, std::to_string(p) + " divides " + std::to_string(m));
  IntPoly r = fermat_ratio(p, m);
  r -= IntPoly::constant(1);
  DivRem qr = divrem_qint(r, p);
  if (!qr.remainder.is_zero()) {
    throw Error(Errc::InternalInconsistency, "q-Fermat ratio is not 1 modulo [p]_q");
  }
  return RatFunc(std::move(qr.quotient));
}

namespace {

struct SumTerm {
  std::size_t j;
  long weight;  // integer weight for unit / floor shapes
};

void validate(const SumSpec& s) {
  if (s.p < 2) throw Error(Errc::InvalidArgument, "sum needs p >= 2");
  if (s.beta == 0) throw Error(Errc::InvalidArgument, "index multiplier must be positive");
  if (s.power != 1 && s.power != 2) throw Error(Errc::InvalidArgument, "denominator power must be 1 or 2");
  if (s.weight == SumWeight::floor_jm_over_p) {
    if (s.m == 0 || std::gcd(s.m, s.p) != 1) {
      throw Error(Errc::PrimeDividesBase, "floor weight needs gcd(m, p) = 1");
    }
  }
}

std::size_t last_index(const SumSpec& s) {
  return s.range == SumRange::full ? s.p - 1 : (s.p - 1) / 2;
}

std::vector<SumTerm> terms_of(const SumSpec& s) {
  std::vector<SumTerm> out;
  for (std::size_t j = 1; j <= last_index(s); ++j) {
    long w = 1;
    if (s.weight == SumWeight::floor_jm_over_p) w = static_cast<long>(j * s.m / s.p);
    if (w == 0) continue;
    if (s.alternating && (j % 2 == 1)) w = -w;
    out.push_back({j, w});
  }
  return out;
}

IntPoly lcm_of_terms(const SumSpec& s, const std::vector<SumTerm>& terms) {
  std::vector<bool> used;
  for (const auto& t : terms) {
    const std::size_t n = t.j * s.beta;
    if (used.size() <= n) used.resize(n + 1, false);
    for (std::size_t e = 2; e <= n; ++e) {
      if (n % e == 0) used[e] = true;
    }
  }
  FactorProduct f;
  for (std::size_t e = 2; e < used.size(); ++e) {
    if (used[e]) f.times_cyclotomic(e, s.power);
  }
  return f.expand();
}

// L (1 - q)^d, shared by every cofactor of one sum.
IntPoly lift(const IntPoly& lcm, unsigned power) {
  IntPoly c = lcm;
  for (unsigned i = 0; i < power; ++i) c.mul_binomial(1);
  return c;
}

// L / [n]_q^d from the lifted L (1 - q)^d.
IntPoly cofactor_from_lift(const IntPoly& lifted, std::size_t n, unsigned power) {
  IntPoly c = lifted;
  for (unsigned i = 0; i < power; ++i) c.div_binomial(n);
  return c;
}

IntPoly cofactor(const IntPoly& lcm, std::size_t n, unsigned power) {
  return cofactor_from_lift(lift(lcm, power), n, power);
}

RatFunc poch_weighted_sum(const SumSpec& s, const IntPoly& lcm, const std::vector<SumTerm>& terms) {
  IntPoly num;
  IntPoly g;
  std::size_t prev = 0;
  for (const auto& t : terms) {
    if (prev == 0) {
      g = neg_q_poch(t.j) * cofactor(lcm, t.j * s.beta, s.power);
      g.shift_up(s.alpha * t.j);
    } else {
      // Consecutive indices: multiply by (1 + q^j) q^alpha [beta(j-1)]^d / [beta j]^d.
      g.mul_binomial(t.j, -1);
      g.shift_up(s.alpha);
      for (unsigned i = 0; i < s.power; ++i) g.mul_binomial(prev * s.beta);
      for (unsigned i = 0; i < s.power; ++i) g.div_binomial(t.j * s.beta);
    }
    num.add_scaled(g, Integer(t.weight));
    prev = t.j;
  }
  return RatFunc(std::move(num), lcm);
}

}  // namespace

namespace serial {

RatFunc q_sum(const SumSpec& s) {
  validate(s);
  const auto terms = terms_of(s);
  if (terms.empty()) return RatFunc();
  IntPoly lcm = lcm_of_terms(s, terms);
  if (s.weight == SumWeight::neg_q_poch) return poch_weighted_sum(s, lcm, terms);
  const IntPoly lifted = lift(lcm, s.power);
  IntPoly num;
  for (const auto& t : terms) {
    num.add_scaled(cofactor_from_lift(lifted, t.j * s.beta, s.power), Integer(t.weight), s.alpha * t.j);
  }
  return RatFunc(std::move(num), std::move(lcm));
}

}  // namespace serial

RatFunc q_sum(const SumSpec& s) {
  validate(s);
  const auto terms = terms_of(s);
  if (terms.empty()) return RatFunc();
  IntPoly lcm = lcm_of_terms(s, terms);
  if (s.weight == SumWeight::neg_q_poch) return poch_weighted_sum(s, lcm, terms);
  const IntPoly lifted = lift(lcm, s.power);
  IntPoly num;
  const long count = static_cast<long>(terms.size());
  std::exception_ptr failure;
#pragma omp parallel if (count >= 8)
  {
    IntPoly local;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto& t = terms[static_cast<std::size_t>(i)];
      try {
        local.add_scaled(cofactor_from_lift(lifted, t.j * s.beta, s.power), Integer(t.weight), s.alpha * t.j);
      } catch (...) {
#pragma omp critical(qcong_q_sum_merge)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(qcong_q_sum_merge)
    num += local;
  }
  if (failure) std::rethrow_exception(failure);
  return RatFunc(std::move(num), std::move(lcm));
}

RatFunc q_ordered_pair_sum(unsigned p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "pair sum needs p >= 3");
  FactorProduct f;
  for (std::size_t e = 2; e < p; ++e) f.times_cyclotomic(e);
  const IntPoly lcm = f.expand();
  const IntPoly lifted = lift(lcm, 1);
  IntPoly prefix;
  IntPoly num;
  for (std::size_t k = 1; k < p; ++k) {
    IntPoly c = cofactor_from_lift(lifted, k, 1);
    if (!prefix.is_zero()) {
      IntPoly term = c * prefix;
      if (k % 2 == 1) term = -term;
      num += term;
    }
    prefix += c;
  }
  return RatFunc(std::move(num), lcm * lcm);
}

std::uint64_t granville_exponent(unsigned p, unsigned m) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::InvalidPrime, "granville_exponent needs a prime p >= 5");
  if (m < 2) throw Error(Errc::InvalidArgument, "granville_exponent needs m >= 2");
  if (m % p == 0) throw Error(Errc::PrimeDividesBase, std::to_string(p) + " divides " + std::to_string(m));
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k < m; ++k) {
    const std::uint64_t f = k * p / m;
    total += (f + 1) * f / 2;
  }
  return total * m;
}

}  // namespace qcong
