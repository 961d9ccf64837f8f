#include "qcong/catalog.hpp"

#include <gmp.h>

#include <algorithm>

#include "qcong/congruence.hpp"
#include "qcong/error.hpp"

namespace qcong {

std::string_view kind_name(StatementKind kind) {
  switch (kind) {
    case StatementKind::q_congruence: return "q-congruence";
    case StatementKind::exact_identity: return "exact-identity";
    case StatementKind::classical: return "classical";
  }
  return "?";
}

const std::vector<StatementInfo>& catalog() {
  using K = StatementKind;
  using P = ParamKind;
  static const std::vector<StatementInfo> entries = {
      {"FLTQ", K::q_congruence, 1, P::m, true, "", "q-Fermat little theorem"},
      {"WOLSTQ", K::q_congruence, 2, P::none, true, "WOLST", "q-Wolstenholme harmonic sum"},
      {"LEHMERQ", K::q_congruence, 2, P::none, true, "LEHMER", "q-analogue of Lehmer's half harmonic sum"},
      {"MORLEYQ", K::q_congruence, 3, P::none, true, "MORLEY", "q-analogue of Morley's central binomial"},
      {"GRANVILLEQ", K::q_congruence, 2, P::m, true, "GRANVILLE", "q-analogue of Granville's binomial product"},
      {"L21A", K::q_congruence, 1, P::none, true, "", "sum 1/[j] mod [p]"},
      {"L21B", K::q_congruence, 1, P::none, true, "", "sum q^j/[j]^2 mod [p]"},
      {"L21C", K::q_congruence, 1, P::none, true, "", "sum 1/[j]^2 mod [p]"},
      {"L22", K::exact_identity, 0, P::k, true, "", "binomial expansion of q^(kp)"},
      {"C24", K::q_congruence, 3, P::k, true, "", "q^(kp) mod [p]^3"},
      {"L23", K::q_congruence, 1, P::none, true, "", "alternating ordered pair sum"},
      {"L24", K::q_congruence, 2, P::none, true, "", "alternating harmonic sum vs even half sum"},
      {"E27", K::q_congruence, 1, P::none, true, "", "even half sum of q^(2j)/[2j]^2"},
      {"L41", K::q_congruence, 1, P::m, true, "LERCH", "q-Fermat quotient as a floor-weighted sum"},
      {"T51", K::q_congruence, 1, P::none, true, "SKULA", "q-analogue of Skula's square Fermat quotient"},
      {"L52", K::exact_identity, 0, P::n, false, "", "finite q-binomial sum with (-q;q)_k"},
      {"C53", K::q_congruence, 1, P::none, true, "GLAISHER", "q-analogue of Glaisher's sum"},
      {"L54", K::exact_identity, 0, P::n, false, "", "finite q-binomial sum with (-q;q)_k/[k]"},
      {"LEHMER", K::classical, 2, P::none, true, "", "Lehmer's half harmonic sum"},
      {"WOLST", K::classical, 2, P::none, true, "", "Wolstenholme's harmonic sum"},
      {"MORLEY", K::classical, 3, P::none, true, "", "Morley's central binomial"},
      {"GRANVILLE", K::classical, 2, P::m, true, "", "Granville's binomial product"},
      {"LERCH", K::classical, 1, P::m, true, "", "Lerch's floor sum"},
      {"SKULA", K::classical, 1, P::none, true, "", "Skula's square Fermat quotient"},
      {"GLAISHER", K::classical, 1, P::none, true, "", "Glaisher's Fermat quotient sum"},
  };
  return entries;
}

const StatementInfo& statement_info(std::string_view id) {
  const auto& all = catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const StatementInfo& s) { return s.id == id; });
  if (it == all.end()) throw Error(Errc::InvalidArgument, "unknown statement id '" + std::string(id) + "'");
  return *it;
}

namespace {

using Str = std::optional<std::string>;

Str need_prime(unsigned p, unsigned least) {
  if (p < least || !is_prime(p)) return "needs a prime p >= " + std::to_string(least);
  return std::nullopt;
}

Str need_coprime(unsigned p, long m, long least) {
  if (m < least) return "needs m >= " + std::to_string(least);
  if (m % static_cast<long>(p) == 0) return std::to_string(p) + " divides m";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> prime_inapplicable(std::string_view id, unsigned p) {
  const StatementInfo& info = statement_info(id);
  if (!info.uses_prime) return std::nullopt;
  if (info.id == "L22") {
    if (p < 2) return "needs p >= 2";
    return std::nullopt;
  }
  static constexpr std::string_view five[] = {"MORLEYQ", "L21B", "L21C", "L23", "L24", "E27", "T51",
                                              "GRANVILLEQ", "WOLST", "MORLEY", "GRANVILLE", "SKULA"};
  const bool from_five = std::find(std::begin(five), std::end(five), info.id) != std::end(five);
  return need_prime(p, from_five ? 5 : 3);
}

std::optional<std::string> param_inapplicable(std::string_view id, unsigned p, long param) {
  const StatementInfo& info = statement_info(id);
  switch (info.param) {
    case ParamKind::none:
      return std::nullopt;
    case ParamKind::k:
      if (param < 1) return "needs k >= 1";
      return std::nullopt;
    case ParamKind::n:
      if (param < 1) return "needs n >= 1";
      return std::nullopt;
    case ParamKind::m:
      break;
  }
  const bool granville = info.id == "GRANVILLEQ" || info.id == "GRANVILLE";
  return need_coprime(p, param, granville ? 2 : 1);
}

std::optional<std::string> inapplicable_reason(std::string_view id, unsigned p, long param) {
  if (auto r = prime_inapplicable(id, p)) return r;
  return param_inapplicable(id, p, param);
}

namespace {

void require_applicable(std::string_view id, unsigned p, long param) {
  if (auto r = inapplicable_reason(id, p, param)) {
    throw Error(Errc::NotApplicable, std::string(id) + " at p=" + std::to_string(p) + ": " + *r);
  }
}

const IntPoly& one_minus_q() {
  static const IntPoly v{1, -1};
  return v;
}

RatFunc rc(const Rational& c) { return RatFunc::constant(c); }

// c * (1-q)^e * [p]^f as one fraction with constant denominator.
RatFunc mono(const Rational& c, unsigned e, unsigned f, unsigned p) {
  IntPoly t = pow(one_minus_q(), e);
  if (f > 0) t *= pow(q_int(p), f);
  t *= Integer(c.get_num());
  return RatFunc(std::move(t), IntPoly::constant(1)) * rc(Rational(1, c.get_den()));
}

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer upow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

int granville_sign(unsigned p, long m) { return (((p - 1) * (m - 1) / 2) % 2 == 0) ? 1 : -1; }

RatFunc harmonic(unsigned p, SumRange range, unsigned beta, unsigned power, unsigned alpha, bool alternating,
                 SumWeight weight = SumWeight::unit, unsigned m = 0) {
  return q_sum(SumSpec{p, range, beta, power, alpha, alternating, weight, m});
}

// sum_{k=0}^{n} (-1)^k [n,k] q^C(n-k,2) (-q;q)_k by the term ratio
// T_k / T_{k-1} = -(1 - q^(n-k+1)) (1 + q^k) / ((1 - q^k) q^(n-k)).
IntPoly finite_binomial_sum(std::size_t n) {
  IntPoly t = IntPoly::monomial(1, n * (n - 1) / 2);
  t.reserve(n * (n + 1) / 2 + 2 * n + 2);
  IntPoly total = t;
  for (std::size_t k = 1; k <= n; ++k) {
    t.mul_binomial(n - k + 1);
    t.mul_binomial(k, -1);
    t.div_binomial(k);
    t.shift_down(n - k).negate();
    total += t;
  }
  return total;
}

// Both sides of the [k]-weighted identity over L = lcm([1], ..., [n]).
// G_k = T_k L/[k] obeys
// G_k q^(n-k) (1 - q^k)^2 = -G_{k-1} (1 - q^(n-k+1)) (1 + q^k) (1 - q^(k-1)).
QInstance weighted_binomial_identity(std::size_t n) {
  FactorProduct f;
  for (std::size_t e = 2; e <= n; ++e) f.times_cyclotomic(e);
  const IntPoly lcm = f.expand();

  // G_1 = -[n] (1 + q) q^C(n-1,2) L
  IntPoly g = q_int(n) * lcm;
  g.reserve(g.size() + n * n);
  g.mul_binomial(1, -1);
  g.shift_up((n - 1) * (n - 2) / 2).negate();
  IntPoly lhs = g;
  for (std::size_t k = 2; k <= n; ++k) {
    g.mul_binomial(n - k + 1);
    g.mul_binomial(k, -1);
    g.mul_binomial(k - 1);
    g.div_binomial(k);
    g.div_binomial(k);
    g.shift_down(n - k).negate();
    lhs += g;
  }

  // sum ((-q)^k - 1) L/[k]
  IntPoly lifted = lcm;
  lifted.mul_binomial(1);
  IntPoly rhs;
  for (std::size_t k = 1; k <= n; ++k) {
    IntPoly c = lifted;
    c.div_binomial(k);
    rhs.add_scaled(c, Integer(k % 2 == 0 ? 1 : -1), k);
    rhs -= c;
  }
  rhs = rhs.shifted(n * (n - 1) / 2);
  return QInstance{RatFunc(std::move(lhs), lcm), RatFunc(std::move(rhs), lcm), std::nullopt};
}

Rational harmonic_value(unsigned last, unsigned step = 1) {
  Rational s = 0;
  for (unsigned j = 1; j <= last; ++j) s += Rational(1, j * step);
  s.canonicalize();
  return s;
}

Rational two_power_sum(unsigned p, unsigned power) {
  Rational s = 0;
  for (unsigned j = 1; j < p; ++j) {
    Integer d = upow(j, power);
    s += Rational(upow(2, j), d);
  }
  s.canonicalize();
  return s;
}

Integer granville_product(unsigned p, long m) {
  Integer prod = granville_sign(p, m);
  for (long k = 1; k < m; ++k) prod *= binom(p - 1, static_cast<unsigned long>(k) * p / m);
  return prod;
}

Rational floor_sum(unsigned p, long m, long scale) {
  Rational s = 0;
  for (unsigned j = 1; j < p; ++j) {
    const long w = static_cast<long>(j) * m / p;
    if (w != 0) s += Rational(w, j * scale);
  }
  s.canonicalize();
  return s;
}

}  // namespace

namespace classical {
Rational fermat_quotient(unsigned p, unsigned m) {
  Rational r(upow(m, p - 1) - 1, p);
  r.canonicalize();
  return r;
}
}  // namespace classical

QInstance build_statement(std::string_view id, unsigned p, long param) {
  const StatementInfo& info = statement_info(id);
  if (info.kind == StatementKind::classical) {
    throw Error(Errc::InvalidArgument, std::string(id) + " is a classical statement");
  }
  require_applicable(id, p, param);
  const std::string_view s = info.id;
  const auto mod = [&](unsigned k) { return std::optional<QModulus>(q_modulus(p, k)); };
  const Rational pp(p);

  if (s == "FLTQ") {
    const auto m = static_cast<std::size_t>(param);
    return {RatFunc(q_poch_base(m, p - 1), q_factorial_poch(p - 1)), RatFunc(IntPoly::constant(1)), mod(1)};
  }
  if (s == "WOLSTQ") {
    return {harmonic(p, SumRange::full, 1, 1, 0, false),
            mono(frac(p - 1, 2), 1, 0, p) + mono(Rational((pp * pp - 1) / 24), 2, 1, p), mod(2)};
  }
  if (s == "LEHMERQ") {
    const RatFunc q2 = q_fermat_quotient(p, 2);
    const RatFunc big_p(q_int(p));
    const RatFunc s2 = harmonic(p, SumRange::half, 2, 1, 0, false);
    RatFunc lhs = rc(2) * s2 + (rc(2) * q2 - q2 * q2 * big_p);
    RatFunc rhs = (q2 * RatFunc(one_minus_q()) + mono(Rational((pp * pp - 1) / 8), 2, 0, p)) * big_p;
    return {std::move(lhs), std::move(rhs), mod(2)};
  }
  if (s == "MORLEYQ") {
    const std::size_t h = (p - 1) / 2;
    IntPoly lhs = q_binom(p - 1, static_cast<long>(h), 2).shifted((static_cast<std::size_t>(p) * p - 1) / 4);
    if (h % 2 == 1) lhs = -lhs;
    const IntPoly nq = neg_q_poch(p - 1);
    return {RatFunc(std::move(lhs)), RatFunc(nq * nq) - mono(Rational((pp * pp - 1) / 24), 2, 2, p), mod(3)};
  }
  if (s == "GRANVILLEQ") {
    const auto m = static_cast<unsigned>(param);
    IntPoly lhs = IntPoly::monomial(1, granville_exponent(p, m)) * Integer(granville_sign(p, m));
    for (unsigned k = 1; k < m; ++k) {
      lhs = lhs * q_binom(p - 1, static_cast<long>(k * p / m), m);
    }
    IntPoly rhs = fermat_ratio(p, m) * Integer(m) - IntPoly::constant(m - 1);
    return {RatFunc(std::move(lhs)), RatFunc(std::move(rhs)), mod(2)};
  }
  if (s == "L21A") {
    return {harmonic(p, SumRange::full, 1, 1, 0, false), mono(frac(p - 1, 2), 1, 0, p), mod(1)};
  }
  if (s == "L21B") {
    return {harmonic(p, SumRange::full, 1, 2, 1, false), mono(-Rational((pp * pp - 1) / 12), 2, 0, p), mod(1)};
  }
  if (s == "L21C") {
    return {harmonic(p, SumRange::full, 1, 2, 0, false), mono(-Rational((pp - 1) * (pp - 5) / 12), 2, 0, p),
            mod(1)};
  }
  if (s == "L22" || s == "C24") {
    const auto k = static_cast<unsigned long>(param);
    RatFunc lhs(IntPoly::monomial(1, k * p));
    const IntPoly x = one_minus_q() * q_int(p);
    const unsigned long top = s == "L22" ? k : std::min<unsigned long>(k, 2);
    IntPoly rhs;
    IntPoly xp = IntPoly::constant(1);
    for (unsigned long j = 0; j <= top; ++j) {
      Integer c = binom(k, j);
      if (j % 2 == 1) c = -c;
      rhs.add_scaled(xp, c);
      if (j < top) xp = xp * x;
    }
    if (s == "L22") return {std::move(lhs), RatFunc(std::move(rhs)), std::nullopt};
    return {std::move(lhs), RatFunc(std::move(rhs)), mod(3)};
  }
  if (s == "L23") {
    const RatFunc a = harmonic(p, SumRange::full, 1, 1, 0, true);
    RatFunc lhs = rc(4) * q_ordered_pair_sum(p);
    RatFunc rhs = a * (a + mono(Rational(pp - 3), 1, 0, p)) + mono(Rational((pp - 1) * (pp + 7) / 12), 2, 0, p);
    return {std::move(lhs), std::move(rhs), mod(1)};
  }
  if (s == "L24") {
    RatFunc lhs = harmonic(p, SumRange::full, 1, 1, 0, true);
    RatFunc rhs = rc(2) * harmonic(p, SumRange::half, 2, 1, 0, false) -
                  (mono(frac(p - 1, 2), 1, 0, p) + mono(Rational((pp * pp - 1) / 24), 2, 1, p));
    return {std::move(lhs), std::move(rhs), mod(2)};
  }
  if (s == "E27") {
    return {mono(-Rational((pp * pp - 1) / 12), 2, 0, p), rc(2) * harmonic(p, SumRange::half, 2, 2, 2, false),
            mod(1)};
  }
  if (s == "L41") {
    const auto m = static_cast<unsigned>(param);
    RatFunc rhs = harmonic(p, SumRange::full, m, 1, 0, false, SumWeight::floor_jm_over_p, m) -
                  mono(Rational((pp - 1) * (m - 1) / 2), 1, 0, p);
    return {q_fermat_quotient(p, m), std::move(rhs), mod(1)};
  }
  if (s == "T51") {
    const RatFunc q2 = q_fermat_quotient(p, 2);
    RatFunc lhs = harmonic(p, SumRange::full, 1, 2, 1, false, SumWeight::neg_q_poch) + q2 * q2;
    RatFunc rhs = rc(-(pp - 1)) * q2 * RatFunc(one_minus_q()) -
                  mono(Rational((7 * pp - 5) * (pp - 1) / 24), 2, 0, p);
    return {std::move(lhs), std::move(rhs), mod(1)};
  }
  if (s == "C53") {
    const RatFunc q2 = q_fermat_quotient(p, 2);
    RatFunc lhs = harmonic(p, SumRange::full, 1, 1, 1, false, SumWeight::neg_q_poch);
    RatFunc rhs = rc(-2) * q2 - mono(Rational(pp - 1), 1, 0, p);
    return {std::move(lhs), std::move(rhs), mod(1)};
  }
  if (s == "L52") {
    const auto n = static_cast<std::size_t>(param);
    IntPoly rhs = IntPoly::monomial(1, n * (n + 1) / 2);
    if (n % 2 == 1) rhs = -rhs;
    return {RatFunc(finite_binomial_sum(n)), RatFunc(std::move(rhs)), std::nullopt};
  }
  if (s == "L54") return weighted_binomial_identity(static_cast<std::size_t>(param));
  throw Error(Errc::InternalInconsistency, "no builder for " + std::string(id));
}

ClassicalInstance build_classical(std::string_view id, unsigned p, long param) {
  const StatementInfo& info = statement_info(id);
  if (info.kind != StatementKind::classical) {
    throw Error(Errc::InvalidArgument, std::string(id) + " is not a classical statement");
  }
  require_applicable(id, p, param);
  const std::string_view s = info.id;
  const Rational q2 = classical::fermat_quotient(p, 2);
  if (s == "WOLST") return {harmonic_value(p - 1), 0, p, 2};
  if (s == "LEHMER") return {harmonic_value((p - 1) / 2), -2 * q2 + q2 * q2 * p, p, 2};
  if (s == "MORLEY") {
    Integer c = binom(p - 1, (p - 1) / 2);
    if (((p - 1) / 2) % 2 == 1) c = -c;
    return {Rational(c), Rational(upow(4, p - 1)), p, 3};
  }
  if (s == "GRANVILLE") {
    const auto m = static_cast<unsigned long>(param);
    return {Rational(granville_product(p, param)), Rational(upow(m, p) - m + 1), p, 2};
  }
  if (s == "LERCH") {
    const auto m = static_cast<unsigned long>(param);
    Rational lhs(upow(m, p) - m, p);
    lhs.canonicalize();
    return {lhs, floor_sum(p, param, 1), p, 1};
  }
  if (s == "SKULA") return {q2 * q2, -two_power_sum(p, 2), p, 1};
  if (s == "GLAISHER") return {q2, -two_power_sum(p, 1) / 2, p, 1};
  throw Error(Errc::InternalInconsistency, "no builder for " + std::string(id));
}

std::optional<ClassicalInstance> limit_pair(std::string_view id, unsigned p, long param) {
  const StatementInfo& info = statement_info(id);
  if (info.companion.empty()) return std::nullopt;
  require_applicable(id, p, param);
  const std::string_view s = info.id;
  const Rational q2 = classical::fermat_quotient(p, 2);
  if (s == "WOLSTQ") return ClassicalInstance{harmonic_value(p - 1), 0, p, 2};
  if (s == "LEHMERQ") {
    return ClassicalInstance{harmonic_value((p - 1) / 2) + 2 * q2 - q2 * q2 * p, 0, p, 2};
  }
  if (s == "MORLEYQ" || s == "GRANVILLEQ") {
    ClassicalInstance c = build_classical(info.companion, p, param);
    return c;
  }
  if (s == "L41") {
    const auto m = static_cast<unsigned>(param);
    return ClassicalInstance{classical::fermat_quotient(p, m), floor_sum(p, param, param), p, 1};
  }
  if (s == "T51") return ClassicalInstance{two_power_sum(p, 2) + q2 * q2, 0, p, 1};
  if (s == "C53") return ClassicalInstance{two_power_sum(p, 1), -2 * q2, p, 1};
  throw Error(Errc::InternalInconsistency, "no q -> 1 pair for " + std::string(id));
}

QInstance mutated(const QInstance& inst) {
  QInstance out = inst;
  if (inst.mod) {
    out.rhs = inst.rhs + mutation_offset(*inst.mod);
  } else {
    out.rhs = inst.rhs + RatFunc(one_minus_q());
  }
  return out;
}

ClassicalInstance mutated(const ClassicalInstance& inst) {
  ClassicalInstance out = inst;
  out.rhs += Rational(upow(inst.p, inst.k - 1));
  return out;
}

}  // namespace qcong
