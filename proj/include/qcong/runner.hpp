#pragma once

// Sweeps over (statement, p, parameter) instances. Instances run
// concurrently; records are stored by enumeration index so the report order
// never depends on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/catalog.hpp"

namespace qcong {

struct RunOptions {
  std::vector<std::string> ids;  // empty means the whole catalog
  std::vector<unsigned> primes;
  std::vector<long> m_values{2};
  std::vector<long> k_values{1, 2, 3};
  std::vector<long> n_values{1, 2, 3, 4, 5};
  bool oracle = true;
  unsigned oracle_primes = 3;
  bool limit = true;
  unsigned jobs = 1;
  bool fail_fast = false;
  std::size_t normalize_threshold = 0;  // 0 disables normalization
  bool mutate = false;
  std::uint64_t seed = 20240901;
};

enum class Outcome { holds, violated, not_applicable, error };
enum class Check { agree, disagree, skipped };

std::string_view outcome_name(Outcome o);
std::string_view check_name(Check c);
Outcome parse_outcome(std::string_view s);
Check parse_check(std::string_view s);

struct InstanceRecord {
  std::string id;
  std::optional<unsigned> p;
  std::optional<long> m;
  StatementKind kind = StatementKind::q_congruence;
  Outcome verdict = Outcome::error;
  Check oracle = Check::skipped;
  Check limit_check = Check::skipped;
  double millis = 0;
  std::string detail;

  bool failed() const {
    return verdict == Outcome::violated || verdict == Outcome::error || oracle == Check::disagree ||
           limit_check == Check::disagree;
  }
};

struct Summary {
  std::size_t total = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::size_t errors = 0;
  std::size_t oracle_disagree = 0;
  std::size_t limit_disagree = 0;
  std::vector<std::string> notes;
};

struct Report {
  std::string version = "1";
  RunOptions config;
  std::vector<InstanceRecord> records;
  Summary summary;
};

struct InstanceKey {
  std::string id;
  std::optional<unsigned> p;
  std::optional<long> param;
};

/// The instances a configuration requests, in report order. Parameter values
/// that violate a statement's parameter conditions (p | m, m below the
/// minimum) are not instances; prime conditions yield not_applicable records.
std::vector<InstanceKey> enumerate_instances(const RunOptions& opt);

InstanceRecord verify_statement(const InstanceKey& key, const RunOptions& opt);

Report verify_range(const RunOptions& opt);

Summary summarize(const std::vector<InstanceRecord>& records);

/// 1 on any violation or disagreement, else 2 on any instance error, else 0.
int exit_code(const Report& report);

/// Deterministic oracle seed for one instance.
std::uint64_t instance_seed(std::uint64_t seed, std::string_view id, std::optional<unsigned> p,
                            std::optional<long> param);

}  // namespace qcong
