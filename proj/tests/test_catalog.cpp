#include <doctest.h>

#include <set>

#include "qcong/catalog.hpp"
#include "qcong/congruence.hpp"
#include "qcong/error.hpp"

using namespace qcong;

namespace {

bool same_value(const RatFunc& a, const RatFunc& b) { return a.num() * b.den() == b.num() * a.den(); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInconsistency;
}

}  // namespace

TEST_CASE("catalog ids are unique and resolvable") {
  std::set<std::string_view> seen;
  for (const auto& s : catalog()) {
    CHECK(seen.insert(s.id).second);
    CHECK(&statement_info(s.id) == &s);
    if (!s.companion.empty()) CHECK(statement_info(s.companion).kind == StatementKind::classical);
  }
  CHECK(catalog().size() == 25);
  CHECK(code_of([] { statement_info("NOPE"); }) == Errc::InvalidArgument);
}

TEST_CASE("Fermat statement at p = 3, m = 2") {
  const QInstance inst = build_statement("FLTQ", 3, 2);
  CHECK(same_value(inst.lhs, RatFunc(q_poch_base(2, 2), q_factorial_poch(2))));
  CHECK(same_value(inst.rhs, RatFunc(IntPoly{1})));
  REQUIRE(inst.mod);
  CHECK(inst.mod->poly == q_int(3));
}

TEST_CASE("applicability") {
  CHECK(code_of([] { build_statement("MORLEYQ", 3, 0); }) == Errc::NotApplicable);
  CHECK(code_of([] { build_statement("GRANVILLEQ", 5, 5); }) == Errc::NotApplicable);
  CHECK(code_of([] { build_statement("GRANVILLEQ", 5, 1); }) == Errc::NotApplicable);
  CHECK(code_of([] { build_classical("WOLST", 3, 0); }) == Errc::NotApplicable);
  CHECK(code_of([] { build_statement("WOLST", 5, 0); }) == Errc::InvalidArgument);
  CHECK(inapplicable_reason("L22", 9, 3) == std::nullopt);
  CHECK(inapplicable_reason("C24", 9, 3).has_value());
  CHECK(inapplicable_reason("L52", 0, 4) == std::nullopt);
  CHECK(inapplicable_reason("L21A", 3, 0) == std::nullopt);
  CHECK(inapplicable_reason("L21B", 3, 0).has_value());
  CHECK(inapplicable_reason("LEHMERQ", 3, 0) == std::nullopt);
  CHECK(prime_inapplicable("FLTQ", 7) == std::nullopt);
  CHECK(param_inapplicable("FLTQ", 7, 14).has_value());
}

TEST_CASE("Granville statement at p = 5, m = 2") {
  const QInstance inst = build_statement("GRANVILLEQ", 5, 2);
  CHECK(same_value(inst.lhs, RatFunc(q_binom(4, 2, 2).shifted(6))));
  const RatFunc rhs = RatFunc(IntPoly{2} * q_poch_base(2, 4), q_factorial_poch(4)) - RatFunc(IntPoly{1});
  CHECK(same_value(inst.rhs, rhs));
  CHECK(inst.mod->k == 2);
  CHECK(check_congruence(inst.lhs, inst.rhs, *inst.mod).holds);
}

TEST_CASE("Lehmer statement shape") {
  const unsigned p = 7;
  const QInstance inst = build_statement("LEHMERQ", p, 0);
  const RatFunc q2 = q_fermat_quotient(p, 2);
  RatFunc s2;
  for (unsigned j = 1; j <= (p - 1) / 2; ++j) s2 = s2 + RatFunc(IntPoly{1}, q_int(2 * j));
  const RatFunc big_p(q_int(p));
  const RatFunc lhs = RatFunc(IntPoly{2}) * s2 + RatFunc(IntPoly{2}) * q2 - q2 * q2 * big_p;
  const RatFunc rhs =
      (q2 * RatFunc(IntPoly{1, -1}) + RatFunc(pow(IntPoly{1, -1}, 2) * Integer(48), IntPoly{8})) * big_p;
  CHECK(same_value(inst.lhs, lhs));
  CHECK(same_value(inst.rhs, rhs));
}

TEST_CASE("identities") {
  const QInstance l22 = build_statement("L22", 7, 1);
  CHECK_FALSE(l22.mod);
  CHECK(check_identity(l22.lhs, l22.rhs));
  for (long n = 1; n <= 12; ++n) {
    const QInstance a = build_statement("L52", 0, n);
    CHECK(check_identity(a.lhs, a.rhs));
    const QInstance b = build_statement("L54", 0, n);
    CHECK(check_identity(b.lhs, b.rhs));
  }
}

TEST_CASE("property: the [k]-weighted identity against direct fractions") {
  for (std::size_t n = 1; n <= 9; ++n) {
    RatFunc lhs, rhs;
    for (std::size_t k = 1; k <= n; ++k) {
      IntPoly t = q_binom(static_cast<long>(n), static_cast<long>(k)) * neg_q_poch(k);
      t = t.shifted((n - k) * (n - k - 1) / 2);
      if (k % 2 == 1) t = -t;
      lhs = lhs + RatFunc(t, q_int(k));
      IntPoly w = IntPoly::monomial(Integer(k % 2 == 0 ? 1 : -1), k) - IntPoly{1};
      rhs = rhs + RatFunc(w, q_int(k));
    }
    rhs = rhs * RatFunc(IntPoly::monomial(1, n * (n - 1) / 2));
    const QInstance inst = build_statement("L54", 0, static_cast<long>(n));
    CHECK(same_value(inst.lhs, lhs));
    CHECK(same_value(inst.rhs, rhs));
  }
}

TEST_CASE("classical statements") {
  const ClassicalInstance lehmer = build_classical("LEHMER", 5, 0);
  CHECK(lehmer.lhs == Rational(3, 2));
  CHECK(lehmer.rhs == 39);
  CHECK(lehmer.k == 2);
  const ClassicalInstance morley = build_classical("MORLEY", 5, 0);
  CHECK(morley.lhs == 6);
  CHECK(morley.rhs == 256);
  const ClassicalInstance gran = build_classical("GRANVILLE", 5, 2);
  CHECK(gran.lhs == 6);
  CHECK(gran.rhs == 31);
  const ClassicalInstance lerch = build_classical("LERCH", 5, 2);
  CHECK(lerch.lhs == 6);
  CHECK(lerch.rhs == Rational(7, 12));
  const ClassicalInstance skula = build_classical("SKULA", 5, 0);
  CHECK(skula.lhs == 9);
  CHECK(classical_check(skula.lhs, skula.rhs, 5, 1));
  for (const auto& info : catalog()) {
    if (info.kind != StatementKind::classical) continue;
    for (unsigned p = 3; p <= 199; p += 2) {
      for (long m : {0L, 2L, 3L, 7L}) {
        if (inapplicable_reason(info.id, p, m)) continue;
        const ClassicalInstance c = build_classical(info.id, p, m);
        CHECK(classical_check(c.lhs, c.rhs, c.p, c.k));
        const ClassicalInstance bad = mutated(c);
        CHECK_FALSE(classical_check(bad.lhs, bad.rhs, bad.p, bad.k));
      }
    }
  }
}

TEST_CASE("q to 1 pairs reproduce the classical companions") {
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    for (long m : {0L, 2L, 3L}) {
      for (const auto& info : catalog()) {
        if (info.companion.empty() || inapplicable_reason(info.id, p, m)) continue;
        if ((info.param == ParamKind::none) != (m == 0)) continue;
        CAPTURE(info.id);
        CAPTURE(p);
        const QInstance inst = build_statement(info.id, p, m);
        const auto pair = limit_pair(info.id, p, m);
        REQUIRE(pair);
        CHECK(q_limit_check(inst.lhs, inst.rhs, pair->lhs, pair->rhs));
        CHECK(classical_check(pair->lhs, pair->rhs, pair->p, pair->k));
      }
    }
  }
  CHECK_FALSE(limit_pair("L21A", 5, 0));
}
