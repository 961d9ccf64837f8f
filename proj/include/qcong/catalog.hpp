#pragma once

// The statement catalog. Each entry is a frozen id with a kind, an
// applicability predicate and builders for both sides. q-statements with a
// classical shadow also provide the aligned q -> 1 pair.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/qkit.hpp"
#include "qcong/ratfunc.hpp"

namespace qcong {

enum class StatementKind { q_congruence, exact_identity, classical };

std::string_view kind_name(StatementKind kind);

/// What the secondary parameter of an instance means.
enum class ParamKind { none, m, k, n };

struct StatementInfo {
  std::string_view id;
  StatementKind kind;
  unsigned exponent;       // k in [p]_q^k or p^k; 0 for identities
  ParamKind param;
  bool uses_prime;         // false for the p-free identities
  std::string_view companion;  // classical q -> 1 shadow, empty if none
  std::string_view title;
};

const std::vector<StatementInfo>& catalog();

/// Throws InvalidArgument for unknown ids.
const StatementInfo& statement_info(std::string_view id);

/// Empty when the instance is applicable, otherwise the reason it is not.
/// The prime and parameter conditions are also available separately; `param`
/// is ignored for statements without a secondary parameter.
std::optional<std::string> inapplicable_reason(std::string_view id, unsigned p, long param);
std::optional<std::string> prime_inapplicable(std::string_view id, unsigned p);
std::optional<std::string> param_inapplicable(std::string_view id, unsigned p, long param);

struct QInstance {
  RatFunc lhs;
  RatFunc rhs;
  std::optional<QModulus> mod;  // absent for exact identities
};

struct ClassicalInstance {
  Rational lhs;
  Rational rhs;
  unsigned p = 0;
  unsigned k = 0;
};

/// Materializes a q-congruence or exact identity. Throws NotApplicable.
QInstance build_statement(std::string_view id, unsigned p, long param);

/// Materializes a classical congruence. Throws NotApplicable.
ClassicalInstance build_classical(std::string_view id, unsigned p, long param);

/// The classical values a q-statement must reduce to at q = 1, with the
/// companion's modulus. Empty for statements without a companion.
std::optional<ClassicalInstance> limit_pair(std::string_view id, unsigned p, long param);

/// The negative control: rhs + (1-q)[p]_q^(k-1), rhs + p^(k-1), or rhs + (1-q)
/// for identities.
QInstance mutated(const QInstance& inst);
ClassicalInstance mutated(const ClassicalInstance& inst);

namespace classical {
/// (m^(p-1) - 1) / p
Rational fermat_quotient(unsigned p, unsigned m);
}

}  // namespace qcong
