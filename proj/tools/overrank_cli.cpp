// Command-line front end: rank tables, f_{m,k} coefficients and verification runs.
//
// Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage, I/O or
// overflow error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "overrank/output.hpp"
#include "overrank/partitions.hpp"
#include "overrank/rank_gf.hpp"
#include "overrank/verify.hpp"

namespace {

using namespace overrank;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << payload;
  if (!out) throw UsageError("failed writing output file: " + out_path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct TableOptions {
  std::string statistic;
  std::string method = "gf";
  int max_n = 0;
  std::string format = "csv";
  std::string out;
  std::string m2_convention = "auto";
};

struct FmkOptions {
  int m = 0;
  int k = 0;
  int trunc = 20;
  std::string method = "definition";
  std::string format = "csv";
  std::string out;
};

struct VerifyOptions {
  std::string check = "all";
  int max_n = 40;
  std::string format = "json";
  std::string out;
  std::string m2_convention = "auto";
};

std::optional<M2Convention> explicit_convention(const std::string& flag) {
  if (flag == "auto") return std::nullopt;
  return parse_m2_convention(flag);
}

int run_table(const TableOptions& opt) {
  const Statistic statistic = parse_statistic(opt.statistic);
  Json params{{"statistic", opt.statistic}, {"method", opt.method}, {"max_n", opt.max_n}};
  RankTable table("", 0);
  if (opt.method == "gf") {
    table = gf_rank_table(statistic, opt.max_n);
  } else {
    M2Convention convention = M2Convention::ceiling;
    if (statistic == Statistic::m2_rank) {
      const auto chosen = explicit_convention(opt.m2_convention);
      convention = chosen ? *chosen : resolve_m2_convention();
      params["m2_convention"] = std::string(to_string(convention));
      params["m2_convention_flag"] = opt.m2_convention;
    }
    table = oracle_rank_table(statistic, opt.max_n, convention);
  }
  if (opt.format == "csv") {
    emit(table_to_csv(table), opt.out);
  } else {
    emit(dump(envelope("table", std::move(params), Json{{"rows", table_rows_json(table)}})), opt.out);
  }
  return kExitOk;
}

int run_fmk(const FmkOptions& opt) {
  if (opt.m < -opt.trunc || opt.m > opt.trunc) throw UsageError("|m| must not exceed --trunc");
  QSeries f(opt.trunc);
  if (opt.method == "definition") {
    f = fmk_by_definition(opt.k, opt.trunc).row(opt.m);
  } else if (opt.method == "recurrence") {
    f = fmk_by_recurrence_from_zero(opt.k, opt.trunc).row(opt.m);
  } else {
    f = fmk_closed_form(opt.m, opt.k, opt.trunc);
  }
  if (opt.format == "csv") {
    emit(series_to_csv(f), opt.out);
  } else {
    Json coeffs = Json::array();
    for (Coeff c : f.coeffs()) coeffs.push_back(c);
    Json params{{"m", opt.m}, {"k", opt.k}, {"trunc", opt.trunc}, {"method", opt.method}};
    emit(dump(envelope("fmk", std::move(params), Json{{"coefficients", std::move(coeffs)}})), opt.out);
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
  Workspace ws(opt.max_n);
  if (const auto chosen = explicit_convention(opt.m2_convention)) ws.expect_m2_convention(*chosen);
  const std::vector<VerificationReport> reports = run_check(opt.check, ws);
  bool passed = true;
  for (const VerificationReport& r : reports) passed = passed && r.passed();

  if (opt.format == "csv") {
    emit(reports_to_csv(reports), opt.out);
  } else {
    Json list = Json::array();
    for (const VerificationReport& r : reports) list.push_back(report_to_json(r));
    Json params{{"check", opt.check}, {"max_n", opt.max_n}, {"m2_convention_flag", opt.m2_convention}};
    Json results{{"passed", passed},
                 {"m2_convention", std::string(to_string(ws.expected_m2_convention()))},
                 {"reports", std::move(list)}};
    emit(dump(envelope("verify", std::move(params), std::move(results))), opt.out);
  }
  for (const VerificationReport& r : reports)
    if (!r.passed())
      std::cerr << "FAILED " << r.check_id << ": " << r.unexpected_count() << " unexpected violation(s)\n";
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank statistics for partitions and overpartitions"};
  app.require_subcommand(1);

  const std::vector<std::string> statistics{"dyson", "d-rank", "m2-rank"};
  const std::vector<std::string> formats{"csv", "json"};
  const std::vector<std::string> conventions{"auto", "floor", "ceiling"};

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Write a rank-count table");
  table->add_option("--statistic", table_opt.statistic)->required()->check(CLI::IsMember(statistics));
  table->add_option("--method", table_opt.method)->check(CLI::IsMember({"gf", "enumerate"}));
  table->add_option("--max-n", table_opt.max_n)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_opt.format)->check(CLI::IsMember(formats));
  table->add_option("--out", table_opt.out, "Output file (default: stdout)");
  table->add_option("--m2-convention", table_opt.m2_convention)->check(CLI::IsMember(conventions));

  FmkOptions fmk_opt;
  auto* fmk = app.add_subcommand("fmk", "Print the coefficients of f_{m,k}(q)");
  fmk->add_option("--m", fmk_opt.m)->required();
  fmk->add_option("--k", fmk_opt.k)->required()->check(CLI::NonNegativeNumber);
  fmk->add_option("--trunc", fmk_opt.trunc)->check(CLI::NonNegativeNumber);
  fmk->add_option("--method", fmk_opt.method)->check(CLI::IsMember({"definition", "recurrence", "closed-form"}));
  fmk->add_option("--format", fmk_opt.format)->check(CLI::IsMember(formats));
  fmk->add_option("--out", fmk_opt.out, "Output file (default: stdout)");

  VerifyOptions verify_opt;
  std::vector<std::string> checks = check_names();
  checks.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--check", verify_opt.check)->check(CLI::IsMember(checks));
  verify->add_option("--max-n", verify_opt.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember(formats));
  verify->add_option("--out", verify_opt.out, "Output file (default: stdout)");
  verify->add_option("--m2-convention", verify_opt.m2_convention)->check(CLI::IsMember(conventions));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return run_table(table_opt);
    if (*fmk) return run_fmk(fmk_opt);
    return run_verify(verify_opt);
  } catch (const std::exception& e) {
    // Includes CoefficientOverflow: a result that cannot be computed exactly is not a failed check.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
