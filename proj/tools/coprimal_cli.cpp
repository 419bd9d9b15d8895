// coprimal: exact counting of k-compositions under coprimality constraints,
// divisor-sum identity cross-checks, Euler-product constants, and residual
// scans against the asymptotic main terms.
//
// Exit codes: 0 success, 1 verification failure (or internal consistency
// fault), 2 usage error, 3 work budget exceeded.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coprimal/asymptotics.hpp"
#include "coprimal/checks.hpp"
#include "coprimal/counting.hpp"

using namespace coprimal;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
  std::string format = "csv";
  int threads = 0;
  std::uint64_t work_budget = 100'000'000;
  std::uint64_t seed = 0;
  std::uint64_t prime_bound = PrimeTable::kDefaultBound;
};

// Fixed-digit formatting (glibc printf rounds ties to even); one format per
// column so identical invocations are byte-identical.
std::string fmt_fixed(long double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, v);
  return buf;
}

std::string fmt_sci(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", v);
  return buf;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    std::printf("%s%s", i ? "," : "", header[i].c_str());
  std::printf("\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::printf("%s%s", i ? "," : "", row[i].c_str());
    std::printf("\n");
  }
}

void print_record(const GlobalOpts& g, const std::string& command,
                  const ordered_json& parameters,
                  const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& csv_rows,
                  const ordered_json& json_rows) {
  if (g.format == "json") {
    ordered_json record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = command;
    record["parameters"] = parameters;
    record["rows"] = json_rows;
    std::printf("%s\n", record.dump(2).c_str());
  } else {
    print_csv(header, csv_rows);
  }
}

// The prime table backing a run; rebuilt only when --prime-bound exceeds the
// default sieve.
const PrimeTable& table_for(const GlobalOpts& g,
                            std::optional<PrimeTable>& storage) {
  if (g.prime_bound <= default_table().bound()) return default_table();
  storage.emplace(g.prime_bound);
  return *storage;
}

CoprimalityConstraint constraint_from_flags(int k, bool all_coprime,
                                            std::optional<int> split_s,
                                            std::optional<int> pairwise_t) {
  int picked = (all_coprime ? 1 : 0) + (split_s ? 1 : 0) + (pairwise_t ? 1 : 0);
  if (picked != 1)
    throw std::invalid_argument(
        "exactly one of --all-coprime, --split, --pairwise is required");
  if (all_coprime) return CoprimalityConstraint::all_coprime(k);
  if (split_s) return CoprimalityConstraint::split(k, *split_s);
  return CoprimalityConstraint::t_wise(k, *pairwise_t);
}

int run_count(const GlobalOpts& g, std::uint64_t n, int k, bool all_coprime,
              std::optional<int> split_s, std::optional<int> pairwise_t,
              const std::string& method_name) {
  std::optional<PrimeTable> storage;
  const PrimeTable& table = table_for(g, storage);
  CoprimalityConstraint constraint =
      constraint_from_flags(k, all_coprime, split_s, pairwise_t);
  Method method =
      method_name == "brute" ? Method::BruteForce : Method::Identity;

  WorkBudget budget;
  budget.limit = g.work_budget;

  BigInt count;
  std::string match;  // empty when not cross-checked
  if (method == Method::BruteForce) {
    count = brute_count(n, constraint, budget, table);
  } else {
    count = identity_count_for(n, constraint, budget, table);
    // Cross-check by brute force when the remaining budget allows it.
    BigInt estimate = BigInt(k) * binomial(n ? n - 1 : 0, k - 1) + 1024;
    if (estimate <= budget.remaining()) {
      BigInt reference = brute_count(n, constraint, budget, table);
      match = count == reference ? "true" : "false";
    }
  }

  ordered_json params{{"n", n},
                      {"k", k},
                      {"constraint", constraint.label()},
                      {"method", method == Method::BruteForce ? "brute" : "identity"},
                      {"work_budget", g.work_budget}};
  std::vector<std::string> header{"n", "k", "constraint", "method", "count",
                                  "match"};
  std::vector<std::vector<std::string>> rows{
      {std::to_string(n), std::to_string(k), constraint.label(),
       method == Method::BruteForce ? "brute" : "identity", count.str(),
       match}};
  ordered_json jrow{{"n", n},
                    {"k", k},
                    {"constraint", constraint.label()},
                    {"method", method == Method::BruteForce ? "brute" : "identity"},
                    {"count", count.str()}};
  if (!match.empty()) jrow["match"] = match == "true";
  print_record(g, "count", params, header, rows, ordered_json::array({jrow}));
  return match == "false" ? 1 : 0;
}

int run_scan(const GlobalOpts& g, const std::string& family, int k,
             std::optional<int> s, std::optional<int> t, std::uint64_t from,
             std::uint64_t to, std::uint64_t step) {
  std::optional<PrimeTable> storage;
  const PrimeTable& table = table_for(g, storage);

  CoprimalityConstraint constraint = [&] {
    if (family == "R") {
      if (s || t)
        throw std::invalid_argument("family R takes neither --s nor --t");
      return CoprimalityConstraint::all_coprime(k);
    }
    if (family == "A") {
      if (!s || t) throw std::invalid_argument("family A requires --s only");
      return CoprimalityConstraint::split(k, *s);
    }
    if (family == "B") {
      if (!t || s) throw std::invalid_argument("family B requires --t only");
      return CoprimalityConstraint::t_wise(k, *t);
    }
    throw std::invalid_argument("family must be R, A or B");
  }();
  if (step == 0) throw std::invalid_argument("--step must be positive");

  std::vector<std::uint64_t> n_list;
  for (std::uint64_t n = from; n <= to; n += step) n_list.push_back(n);

  WorkBudget budget;
  budget.limit = g.work_budget;
  ScanResult scan = residual_scan(constraint, n_list, budget, g.prime_bound,
                                  g.threads, table);

  int s_or_t = constraint.kind == ConstraintKind::AllCoprime ? k
                                                             : constraint.param;
  ordered_json params{{"family", family}, {"k", k},
                      {"s_or_t", s_or_t},  {"from", from},
                      {"to", to},          {"step", step},
                      {"prime_bound", g.prime_bound},
                      {"work_budget", g.work_budget},
                      {"partial", scan.truncated}};
  std::vector<std::string> header{"n",     "family",   "k",
                                  "s_or_t", "exact",    "main",
                                  "residual", "normalized_residual"};
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (const ResidualRow& r : scan.rows) {
    std::string main = fmt_fixed(r.main_term, 6);
    std::string resid = fmt_fixed(r.residual, 6);
    std::string norm = fmt_fixed(r.normalized_residual, 9);
    rows.push_back({std::to_string(r.n), family, std::to_string(k),
                    std::to_string(s_or_t), r.exact_count.str(), main, resid,
                    norm});
    jrows.push_back(ordered_json{{"n", r.n},
                                 {"family", family},
                                 {"k", k},
                                 {"s_or_t", s_or_t},
                                 {"exact", r.exact_count.str()},
                                 {"main", main},
                                 {"residual", resid},
                                 {"normalized_residual", norm}});
  }
  print_record(g, "scan", params, header, rows, jrows);
  if (scan.truncated) {
    std::fprintf(stderr,
                 "scan: work budget exceeded after %zu of %zu rows\n",
                 scan.rows.size(), n_list.size());
    return 3;
  }
  return 0;
}

int run_constants(const GlobalOpts& g, const std::string& kind, int k,
                  std::vector<int> params_list, int digits) {
  std::optional<PrimeTable> storage;
  const PrimeTable& table = table_for(g, storage);
  if (digits < 1 || digits > 18)
    throw std::invalid_argument("--digits must be in [1, 18]");
  bool split_kind = kind == "C" || kind == "H";
  if (!split_kind && kind != "D" && kind != "L")
    throw std::invalid_argument("--kind must be C, D, H or L");

  if (params_list.empty()) {
    if (split_kind)
      for (int s = 1; s <= k - 1; ++s) params_list.push_back(s);
    else
      for (int t = 2; t <= k; ++t) params_list.push_back(t);
  }

  ordered_json params{{"kind", kind},
                      {"k", k},
                      {"prime_bound", g.prime_bound},
                      {"digits", digits}};
  std::vector<std::string> header{"kind", "k",     "s_or_t",
                                  "prime_bound", "value", "tail_estimate"};
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (int p : params_list) {
    EulerProductResult r =
        kind == "C"   ? constant_C(k, p, g.prime_bound, table, g.threads)
        : kind == "D" ? constant_D(k, p, g.prime_bound, table, g.threads)
        : kind == "H" ? H_at_ones(k, p, g.prime_bound, table, g.threads)
                      : L_at_ones(k, p, g.prime_bound, table, g.threads);
    std::string value = fmt_fixed(r.value, digits);
    std::string tail = fmt_sci(r.tail_bound_estimate);
    rows.push_back({kind, std::to_string(k), std::to_string(p),
                    std::to_string(r.prime_bound), value, tail});
    jrows.push_back(ordered_json{{"kind", kind},
                                 {"k", k},
                                 {"s_or_t", p},
                                 {"prime_bound", r.prime_bound},
                                 {"value", value},
                                 {"tail_estimate", tail}});
  }
  print_record(g, "constants", params, header, rows, jrows);
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite_name) {
  checks::Suite suite = checks::parse_suite(suite_name);
  checks::CheckOptions opt;
  opt.threads = g.threads;
  opt.seed = g.seed;
  std::vector<checks::CheckResult> results = checks::run_suite(suite, opt);

  ordered_json params{{"suite", suite_name}, {"seed", g.seed}};
  std::vector<std::string> header{"check_name", "cases_run", "failures"};
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  std::uint64_t total_failures = 0;
  for (const checks::CheckResult& r : results) {
    total_failures += r.failures;
    rows.push_back({r.name, std::to_string(r.cases_run),
                    std::to_string(r.failures)});
    ordered_json jrow{{"check_name", r.name},
                      {"cases_run", r.cases_run},
                      {"failures", r.failures}};
    if (!r.detail.empty()) jrow["detail"] = r.detail;
    jrows.push_back(jrow);
  }
  print_record(g, "verify", params, header, rows, jrows);
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coprimal: exact and asymptotic counting of k-compositions of n under "
      "coprimality constraints"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads,
                 "Worker threads; 0 = hardware concurrency (default 0)");
  app.add_option("--work-budget", g.work_budget,
                 "Enumeration step limit (default 1e8)");
  app.add_option("--seed", g.seed,
                 "Seed for randomized verification suites (default 0)");
  app.add_option("--prime-bound", g.prime_bound,
                 "Euler products use primes up to this bound (default 1e6)");

  // count
  auto* count_cmd = app.add_subcommand(
      "count", "Count k-compositions of n under one constraint. Columns: "
               "n,k,constraint,method,count,match");
  std::uint64_t n = 0;
  int k = 0;
  bool all_coprime = false;
  std::optional<int> split_s, pairwise_t;
  std::string method = "identity";
  count_cmd->add_option("--n", n, "Total being composed")->required();
  count_cmd->add_option("--k", k, "Number of summands")->required();
  count_cmd->add_flag("--all-coprime", all_coprime,
                      "R family: gcd of all summands is 1");
  count_cmd->add_option("--split", split_s,
                        "A family: first s summands coprime to the rest");
  count_cmd->add_option("--pairwise", pairwise_t,
                        "B family: every t summands are coprime");
  count_cmd->add_option("--method", method, "identity (default) or brute")
      ->check(CLI::IsMember({"identity", "brute"}));

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "Exact counts vs asymptotic main term over a range of n. "
              "Columns: n,family,k,s_or_t,exact,main,residual,"
              "normalized_residual. Budget overrun: partial rows, exit 3");
  std::string family;
  int scan_k = 0;
  std::optional<int> scan_s, scan_t;
  std::uint64_t from = 0, to = 0, step = 1;
  scan_cmd->add_option("--family", family, "R, A or B")->required();
  scan_cmd->add_option("--k", scan_k, "Number of summands")->required();
  scan_cmd->add_option("--s", scan_s, "Split point (family A)");
  scan_cmd->add_option("--t", scan_t, "Subset size (family B)");
  scan_cmd->add_option("--from", from, "First n")->required();
  scan_cmd->add_option("--to", to, "Last n (inclusive)")->required();
  scan_cmd->add_option("--step", step, "Stride (default 1)");

  // constants
  auto* const_cmd = app.add_subcommand(
      "constants", "Euler-product constants C/D and the products H/L at "
                   "z=(1,..,1). Columns: kind,k,s_or_t,prime_bound,value,"
                   "tail_estimate");
  std::string kind;
  int const_k = 0;
  std::vector<int> const_params;
  int digits = 15;
  const_cmd->add_option("--kind", kind, "C, D, H or L")->required();
  const_cmd->add_option("--k", const_k, "Number of summands")->required();
  const_cmd->add_option("--param", const_params,
                        "s (C/H) or t (D/L); repeatable; default all valid");
  const_cmd->add_option("--digits", digits, "Value digits (default 15)");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run a verification suite; exit 0 iff zero failures. "
                "Columns: check_name,cases_run,failures");
  std::string suite = "all";
  verify_cmd->add_option(
      "--suite", suite,
      "identities, convolution, partitions, asymptotics or all (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count_cmd)
      return run_count(g, n, k, all_coprime, split_s, pairwise_t, method);
    if (*scan_cmd)
      return run_scan(g, family, scan_k, scan_s, scan_t, from, to, step);
    if (*const_cmd)
      return run_constants(g, kind, const_k, const_params, digits);
    if (*verify_cmd) return run_verify(g, suite);
  } catch (const budget_exceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const internal_fault& e) {
    std::fprintf(stderr, "internal consistency fault: %s\n", e.what());
    return 1;
  }
  return 2;
}
