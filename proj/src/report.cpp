#include "qcong/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qcong/error.hpp"

namespace qcong {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw Error(Errc::InvalidArgument, "unknown format '" + s + "'");
}

namespace {

StatementKind parse_kind(const std::string& s) {
  for (auto k : {StatementKind::q_congruence, StatementKind::exact_identity, StatementKind::classical}) {
    if (kind_name(k) == s) return k;
  }
  throw Error(Errc::InvalidArgument, "unknown kind '" + s + "'");
}

json config_json(const RunOptions& c) {
  return json{{"statements", c.ids},
              {"primes", c.primes},
              {"m", c.m_values},
              {"k", c.k_values},
              {"n", c.n_values},
              {"oracle", c.oracle},
              {"oracle_primes", c.oracle_primes},
              {"limit", c.limit},
              {"fail_fast", c.fail_fast},
              {"normalize_threshold", c.normalize_threshold},
              {"mutate", c.mutate},
              {"seed", c.seed}};
}

RunOptions config_from(const json& j) {
  RunOptions c;
  c.ids = j.at("statements").get<std::vector<std::string>>();
  c.primes = j.at("primes").get<std::vector<unsigned>>();
  c.m_values = j.at("m").get<std::vector<long>>();
  c.k_values = j.at("k").get<std::vector<long>>();
  c.n_values = j.at("n").get<std::vector<long>>();
  c.oracle = j.at("oracle").get<bool>();
  c.oracle_primes = j.at("oracle_primes").get<unsigned>();
  c.limit = j.at("limit").get<bool>();
  c.fail_fast = j.at("fail_fast").get<bool>();
  c.normalize_threshold = j.at("normalize_threshold").get<std::size_t>();
  c.mutate = j.at("mutate").get<bool>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

json record_json(const InstanceRecord& r) {
  json j{{"id", r.id},
         {"kind", kind_name(r.kind)},
         {"verdict", outcome_name(r.verdict)},
         {"oracle", check_name(r.oracle)},
         {"limit_check", check_name(r.limit_check)},
         {"millis", r.millis},
         {"detail", r.detail}};
  j["p"] = r.p ? json(*r.p) : json(nullptr);
  j["m"] = r.m ? json(*r.m) : json(nullptr);
  return j;
}

InstanceRecord record_from(const json& j) {
  InstanceRecord r;
  r.id = j.at("id").get<std::string>();
  if (!j.at("p").is_null()) r.p = j.at("p").get<unsigned>();
  if (!j.at("m").is_null()) r.m = j.at("m").get<long>();
  r.kind = parse_kind(j.at("kind").get<std::string>());
  r.verdict = parse_outcome(j.at("verdict").get<std::string>());
  r.oracle = parse_check(j.at("oracle").get<std::string>());
  r.limit_check = parse_check(j.at("limit_check").get<std::string>());
  r.millis = j.at("millis").get<double>();
  if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
  return r;
}

std::string opt_str(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

std::string millis_str(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string to_json(const Report& report) {
  const Summary& s = report.summary;
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  json j{{"version", report.version},
         {"config", config_json(report.config)},
         {"records", std::move(records)},
         {"summary",
          {{"total", s.total},
           {"holds", s.holds},
           {"violated", s.violated},
           {"not_applicable", s.not_applicable},
           {"errors", s.errors},
           {"oracle_disagree", s.oracle_disagree},
           {"limit_disagree", s.limit_disagree},
           {"notes", s.notes}}}};
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "id,p,m,kind,verdict,oracle,limit_check,millis\n";
  for (const auto& r : report.records) {
    out << r.id << ',' << opt_str(r.p) << ',' << opt_str(r.m) << ',' << kind_name(r.kind) << ','
        << outcome_name(r.verdict) << ',' << check_name(r.oracle) << ',' << check_name(r.limit_check) << ','
        << millis_str(r.millis) << '\n';
  }
  return out.str();
}

std::string to_table(const Report& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-11s %5s %5s  %-15s %-15s %-9s %-9s %10s\n", "id", "p", "m", "kind", "verdict",
                "oracle", "limit", "ms");
  out << line;
  for (const auto& r : report.records) {
    std::snprintf(line, sizeof line, "%-11s %5s %5s  %-15s %-15s %-9s %-9s %10s\n", r.id.c_str(),
                  opt_str(r.p).c_str(), opt_str(r.m).c_str(), std::string(kind_name(r.kind)).c_str(),
                  std::string(outcome_name(r.verdict)).c_str(), std::string(check_name(r.oracle)).c_str(),
                  std::string(check_name(r.limit_check)).c_str(), millis_str(r.millis).c_str());
    out << line;
  }
  const Summary& s = report.summary;
  out << s.total << " instances: " << s.holds << " hold, " << s.violated << " violated, " << s.not_applicable
      << " not applicable, " << s.errors << " errors";
  if (s.oracle_disagree + s.limit_disagree > 0) {
    out << ", " << s.oracle_disagree << " oracle and " << s.limit_disagree << " limit disagreements";
  }
  out << '\n';
  for (const auto& n : s.notes) out << "note: " << n << '\n';
  return out.str();
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::json: return to_json(report);
    case Format::csv: return to_csv(report);
    case Format::table: return to_table(report);
  }
  return {};
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    if (r.version != "1") throw Error(Errc::InvalidArgument, "unsupported report version " + r.version);
    r.config = config_from(j.at("config"));
    for (const auto& rec : j.at("records")) r.records.push_back(record_from(rec));
    r.summary = summarize(r.records);
    r.summary.notes = j.at("summary").at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

}  // namespace qcong
