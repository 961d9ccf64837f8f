#include "qcong/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "qcong/error.hpp"
#include "qcong/qkit.hpp"
#include "qcong/report.hpp"
#include "qcong/runner.hpp"

namespace qcong {

std::vector<long> parse_values(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  const auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(Errc::InvalidArgument, "not an integer: '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_long(item));
      continue;
    }
    const long lo = to_long(item.substr(0, dots));
    const long hi = to_long(item.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

namespace {

struct VerifyArgs {
  std::string statements = "all";
  std::string primes = "3..31";
  std::string m = "2";
  std::string k = "1..3";
  std::string n = "1..5";
  bool no_oracle = false;
  unsigned oracle_primes = 3;
  bool no_limit = false;
  std::string format = "table";
  std::string output;
  std::optional<long> jobs;
  bool fail_fast = false;
  std::size_t normalize_threshold = 0;
  bool mutate = false;
  std::uint64_t seed = RunOptions{}.seed;
};

long default_jobs() {
  if (const char* env = std::getenv("QCONG_JOBS")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "QCONG_JOBS must be a positive integer");
    }
  }
  return 1;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  if (text == "all") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    statement_info(item);
    out.push_back(item);
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "no statements selected");
  return out;
}

bool write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  RunOptions opt;
  opt.ids = split_ids(a.statements);
  for (long v : parse_values(a.primes)) {
    if (v >= 2 && is_prime(static_cast<std::uint64_t>(v))) opt.primes.push_back(static_cast<unsigned>(v));
  }
  opt.m_values = parse_values(a.m);
  opt.k_values = parse_values(a.k);
  opt.n_values = parse_values(a.n);
  opt.oracle = !a.no_oracle;
  opt.oracle_primes = a.oracle_primes;
  opt.limit = !a.no_limit;
  opt.fail_fast = a.fail_fast;
  opt.normalize_threshold = a.normalize_threshold;
  opt.mutate = a.mutate;
  opt.seed = a.seed;
  const long jobs = a.jobs ? *a.jobs : default_jobs();
  if (jobs < 1) throw Error(Errc::InvalidArgument, "parallelism must be at least 1");
  opt.jobs = static_cast<unsigned>(jobs);
  const Format format = parse_format(a.format);

  const auto ids = opt.ids.empty() ? std::vector<std::string>{} : opt.ids;
  const bool needs_primes =
      ids.empty() || std::any_of(ids.begin(), ids.end(), [](const std::string& id) { return statement_info(id).uses_prime; });
  if (needs_primes && opt.primes.empty()) throw Error(Errc::InvalidArgument, "no primes in range '" + a.primes + "'");

  const Report report = verify_range(opt);
  if (!write_output(render(report, format), a.output, out, err)) return 2;
  return exit_code(report);
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw Error(Errc::InvalidArgument, "not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string show_ratfunc(const RatFunc& f) {
  const RatFunc n = rf_normalize(f);
  if (n.is_polynomial()) return n.num().pretty();
  return "(" + n.num().pretty() + ")/(" + n.den().pretty() + ")";
}

int cmd_eval(const std::string& object, const std::vector<long>& v, const std::string& at, bool pretty,
             std::ostream& out) {
  const auto need = [&](std::size_t count) {
    if (v.size() != count) {
      throw Error(Errc::InvalidArgument, object + " takes " + std::to_string(count) + " integer arguments");
    }
  };
  const auto nonneg = [](long x, const char* what) {
    if (x < 0) throw Error(Errc::InvalidArgument, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(x);
  };

  std::optional<IntPoly> poly;
  std::optional<RatFunc> frac;
  if (object == "qint") {
    need(1);
    poly = q_int(nonneg(v[0], "n"));
  } else if (object == "qbinom") {
    if (v.size() == 2) {
      poly = q_binom(v[0], v[1], 1);
    } else {
      need(3);
      if (v[2] < 1) throw Error(Errc::InvalidArgument, "s must be positive");
      poly = q_binom(v[0], v[1], static_cast<std::size_t>(v[2]));
    }
  } else if (object == "qpoch") {
    need(4);
    if (v[0] != 1 && v[0] != -1) throw Error(Errc::InvalidArgument, "sign must be 1 or -1");
    if (v[2] < 1) throw Error(Errc::InvalidArgument, "step must be positive");
    poly = q_poch(PochSpec{static_cast<int>(v[0]), nonneg(v[1], "offset"), static_cast<std::size_t>(v[2]),
                           nonneg(v[3], "length")});
  } else if (object == "qfermat") {
    need(2);
    if (v[0] < 0 || v[1] < 0) throw Error(Errc::InvalidArgument, "p and m must be non-negative");
    frac = q_fermat_quotient(static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1]));
  } else {
    throw Error(Errc::InvalidArgument, "unknown object '" + object + "' (qint, qbinom, qpoch, qfermat)");
  }

  if (!at.empty()) {
    const Rational x = parse_rational(at);
    const Rational value = poly ? eval_at(*poly, x) : eval_at(*frac, x);
    out << value.get_str() << '\n';
    return 0;
  }
  if (poly) {
    out << (pretty ? poly->pretty() : poly->to_string()) << '\n';
  } else {
    out << show_ratfunc(*frac) << '\n';
  }
  return 0;
}

int cmd_report(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot read " << path << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const Report report = report_from_json(buf.str());
  out << render(report, parse_format(format));
  return 0;
}

int cmd_list(std::ostream& out) {
  for (const auto& s : catalog()) {
    out << s.id << '\t' << kind_name(s.kind);
    if (s.exponent > 0) out << "\tk=" << s.exponent;
    else out << '\t' << '-';
    switch (s.param) {
      case ParamKind::none: out << "\t-"; break;
      case ParamKind::m: out << "\tm"; break;
      case ParamKind::k: out << "\tk"; break;
      case ParamKind::n: out << "\tn"; break;
    }
    out << '\t' << (s.companion.empty() ? "-" : s.companion) << '\t' << s.title << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-analogue congruences", "qcong"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check catalogued statements over a sweep");
  verify->add_option("--statements", va.statements, "comma separated ids or 'all'");
  verify->add_option("--primes", va.primes, "primes to sweep, e.g. 3..31");
  verify->add_option("--m", va.m, "values of m, e.g. 2..10");
  verify->add_option("--k", va.k, "values of k for L22 and C24");
  verify->add_option("--n", va.n, "values of n for L52 and L54");
  verify->add_flag("!--oracle,--no-oracle", va.no_oracle, "skip the finite-field cross-check");
  verify->add_option("--oracle-primes", va.oracle_primes, "oracle primes per instance");
  verify->add_flag("!--limit,--no-limit", va.no_limit, "skip q -> 1 checks");
  verify->add_option("--format", va.format, "table, json or csv");
  verify->add_option("--output", va.output, "write the report to a file");
  verify->add_option("--jobs", va.jobs, "parallel instances (default $QCONG_JOBS or 1)");
  verify->add_flag("--fail-fast", va.fail_fast, "stop after the first failing instance");
  verify->add_option("--normalize-threshold", va.normalize_threshold,
                     "reduce fractions whose combined degree exceeds this (0 = never)");
  verify->add_flag("--mutate", va.mutate, "perturb every right-hand side; all instances must fail");
  verify->add_option("--seed", va.seed, "oracle seed");

  std::string object;
  std::vector<long> eval_values;
  std::string eval_at_text;
  bool pretty = false;
  auto* eval = app.add_subcommand("eval", "print a q-object");
  eval->add_option("object", object, "qint n | qbinom n m [s] | qpoch c e s n | qfermat p m")->required();
  eval->add_option("values", eval_values, "integer arguments")->allow_extra_args();
  eval->add_option("--at", eval_at_text, "evaluate at a rational point");
  eval->add_flag("--pretty", pretty, "render as 1 + q + 2q^2");

  std::string report_path;
  std::string report_format = "table";
  auto* report = app.add_subcommand("report", "re-render a JSON report");
  report->add_option("input", report_path, "report file")->required();
  report->add_option("--format", report_format, "table, json or csv");

  auto* list = app.add_subcommand("list", "list the statement catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (eval->parsed()) return cmd_eval(object, eval_values, eval_at_text, pretty, out);
    if (report->parsed()) return cmd_report(report_path, report_format, out, err);
    if (list->parsed()) return cmd_list(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qcong
