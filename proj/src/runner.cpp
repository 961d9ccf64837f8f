#include "qcong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include "qcong/congruence.hpp"
#include "qcong/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcong {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::violated: return "violated";
    case Outcome::not_applicable: return "not_applicable";
    case Outcome::error: return "error";
  }
  return "error";
}

std::string_view check_name(Check c) {
  switch (c) {
    case Check::agree: return "agree";
    case Check::disagree: return "disagree";
    case Check::skipped: return "skipped";
  }
  return "skipped";
}

Outcome parse_outcome(std::string_view s) {
  for (Outcome o : {Outcome::holds, Outcome::violated, Outcome::not_applicable, Outcome::error}) {
    if (outcome_name(o) == s) return o;
  }
  throw Error(Errc::InvalidArgument, "unknown verdict '" + std::string(s) + "'");
}

Check parse_check(std::string_view s) {
  for (Check c : {Check::agree, Check::disagree, Check::skipped}) {
    if (check_name(c) == s) return c;
  }
  throw Error(Errc::InvalidArgument, "unknown check result '" + std::string(s) + "'");
}

std::uint64_t instance_seed(std::uint64_t seed, std::string_view id, std::optional<unsigned> p,
                            std::optional<long> param) {
  // FNV-1a over the key, then one splitmix64 round.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  const auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (char c : id) mix(static_cast<unsigned char>(c));
  const std::uint64_t pv = p ? *p : 0;
  const auto mv = static_cast<std::uint64_t>(param ? *param : -1);
  for (int i = 0; i < 8; ++i) mix((pv >> (8 * i)) & 0xff);
  for (int i = 0; i < 8; ++i) mix((mv >> (8 * i)) & 0xff);
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

namespace {

const std::vector<long>& values_for(ParamKind kind, const RunOptions& opt) {
  static const std::vector<long> none{0};
  switch (kind) {
    case ParamKind::m: return opt.m_values;
    case ParamKind::k: return opt.k_values;
    case ParamKind::n: return opt.n_values;
    case ParamKind::none: break;
  }
  return none;
}

std::vector<std::string> requested_ids(const RunOptions& opt) {
  if (!opt.ids.empty()) return opt.ids;
  std::vector<std::string> out;
  for (const auto& s : catalog()) out.emplace_back(s.id);
  return out;
}

void verify_q(const StatementInfo& info, const InstanceKey& key, const RunOptions& opt, InstanceRecord& rec) {
  const unsigned p = key.p.value_or(0);
  const long param = key.param.value_or(0);
  QInstance inst = build_statement(info.id, p, param);
  if (opt.mutate) inst = mutated(inst);
  if (opt.normalize_threshold > 0) {
    inst.lhs = rf_normalize_above(inst.lhs, opt.normalize_threshold);
    inst.rhs = rf_normalize_above(inst.rhs, opt.normalize_threshold);
  }

  if (!inst.mod) {
    rec.verdict = check_identity(inst.lhs, inst.rhs) ? Outcome::holds : Outcome::violated;
    return;
  }

  const Verdict v = check_congruence(inst.lhs, inst.rhs, *inst.mod);
  rec.verdict = v.holds ? Outcome::holds : Outcome::violated;
  if (v.failure) rec.detail = v.failure->stage;

  if (opt.oracle && opt.oracle_primes > 0) {
    const OracleReport o = oracle_cross_check(inst.lhs, inst.rhs, *inst.mod, v.holds,
                                              instance_seed(opt.seed, info.id, key.p, key.param), opt.oracle_primes);
    rec.oracle = o.agree ? Check::agree : Check::disagree;
  }

  if (opt.limit && !info.companion.empty()) {
    const auto pair = limit_pair(info.id, p, param);
    bool ok = q_limit_check(inst.lhs, inst.rhs, pair->lhs, pair->rhs);
    if (ok && !inapplicable_reason(info.companion, p, param)) {
      ok = classical_check(pair->lhs, pair->rhs, pair->p, pair->k);
    }
    rec.limit_check = ok ? Check::agree : Check::disagree;
  }
}

void verify_classical(const StatementInfo& info, const InstanceKey& key, const RunOptions& opt, InstanceRecord& rec) {
  ClassicalInstance inst = build_classical(info.id, key.p.value_or(0), key.param.value_or(0));
  if (opt.mutate) inst = mutated(inst);
  rec.verdict = classical_check(inst.lhs, inst.rhs, inst.p, inst.k) ? Outcome::holds : Outcome::violated;
}

}  // namespace

std::vector<InstanceKey> enumerate_instances(const RunOptions& opt) {
  std::vector<InstanceKey> out;
  for (const std::string& id : requested_ids(opt)) {
    const StatementInfo& info = statement_info(id);
    const auto& params = values_for(info.param, opt);
    const auto add = [&](std::optional<unsigned> p) {
      for (long v : params) {
        if (info.param != ParamKind::none && p && !prime_inapplicable(id, *p) && param_inapplicable(id, *p, v)) {
          continue;
        }
        if (info.param != ParamKind::none && !p && param_inapplicable(id, 0, v)) continue;
        std::optional<long> param;
        if (info.param != ParamKind::none) param = v;
        out.push_back({std::string(info.id), p, param});
      }
    };
    if (info.uses_prime) {
      for (unsigned p : opt.primes) add(p);
    } else {
      add(std::nullopt);
    }
  }
  return out;
}

InstanceRecord verify_statement(const InstanceKey& key, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const StatementInfo& info = statement_info(key.id);
  InstanceRecord rec;
  rec.id = key.id;
  rec.p = key.p;
  rec.m = key.param;
  rec.kind = info.kind;
  if (auto why = inapplicable_reason(key.id, key.p.value_or(0), key.param.value_or(0))) {
    rec.verdict = Outcome::not_applicable;
    rec.detail = *why;
  } else {
    try {
      if (info.kind == StatementKind::classical) {
        verify_classical(info, key, opt, rec);
      } else {
        verify_q(info, key, opt, rec);
      }
    } catch (const Error& e) {
      rec.verdict = e.code() == Errc::NotApplicable ? Outcome::not_applicable : Outcome::error;
      rec.detail = e.what();
    } catch (const std::exception& e) {
      rec.verdict = Outcome::error;
      rec.detail = e.what();
    }
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

Summary summarize(const std::vector<InstanceRecord>& records) {
  Summary s;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.verdict) {
      case Outcome::holds: ++s.holds; break;
      case Outcome::violated: ++s.violated; break;
      case Outcome::not_applicable: ++s.not_applicable; break;
      case Outcome::error: ++s.errors; break;
    }
    if (r.oracle == Check::disagree) ++s.oracle_disagree;
    if (r.limit_check == Check::disagree) ++s.limit_disagree;
  }
  return s;
}

Report verify_range(const RunOptions& opt) {
  const std::vector<InstanceKey> keys = enumerate_instances(opt);
  std::vector<InstanceRecord> records(keys.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first_failure{kNone};

  const long count = static_cast<long>(keys.size());
  const int threads = static_cast<int>(std::max(1u, opt.jobs));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (opt.fail_fast && idx > first_failure.load()) continue;
    records[idx] = verify_statement(keys[idx], opt);
    if (opt.fail_fast && records[idx].failed()) {
      std::size_t cur = first_failure.load();
      while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
      }
    }
  }

  Report report;
  report.config = opt;
  if (first_failure.load() != kNone) {
    records.resize(first_failure.load() + 1);
  }
  report.records = std::move(records);
  report.summary = summarize(report.records);
  if (first_failure.load() != kNone) {
    report.summary.notes.push_back("fail-fast: stopped after the first failing instance");
  }
  const auto requested = requested_ids(opt);
  if (std::find(requested.begin(), requested.end(), "SKULA") != requested.end()) {
    report.summary.notes.push_back("SKULA compares two rational numbers, so it is checked modulo p");
  }
  if (opt.mutate) report.summary.notes.push_back("mutation self-test: every right-hand side was perturbed");
  return report;
}

int exit_code(const Report& report) {
  const Summary& s = report.summary;
  if (s.violated > 0 || s.oracle_disagree > 0 || s.limit_disagree > 0) return 1;
  if (s.errors > 0) return 2;
  return 0;
}

}  // namespace qcong
