#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "irank/errors.h"
#include "irank_cli/commands.h"
#include "irank_cli/json_io.h"

namespace {

using irank::cli::Json;

struct Options {
  std::string input = "-";
  std::string report;
  std::string output = "json";
  bool timing = false;
  irank::Budgets budgets;
};

// Returns false if the file cannot be opened.
bool ReadAll(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void Emit(const Json& report, const Options& options) {
  if (options.output == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << irank::cli::RenderText(report);
  }
}

int Fail(std::string_view command, const irank::Error& e, const Options& options) {
  std::cerr << "error: " << irank::ErrorKindName(e.kind()) << ": " << e.what() << "\n";
  if (options.output == "json") Emit(irank::cli::ErrorReport(command, e), options);
  return irank::cli::ExitCode(e.kind());
}

int RunAnalysis(irank::cli::Command command, const Options& options) {
  const std::string_view name = irank::cli::CommandName(command);
  std::string text;
  if (!ReadAll(options.input, text)) {
    std::cerr << "error: cannot read " << options.input << "\n";
    return 1;
  }
  try {
    const irank::cli::MatrixInput input = irank::cli::ParseMatrixDocument(text);
    const auto start = std::chrono::steady_clock::now();
    Json report = irank::cli::Run(command, input, options.budgets);
    const std::int64_t us = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    if (options.timing) report["elapsed_us"] = us;
    Emit(report, options);
    if (options.output == "text" && !options.timing) {
      std::cout << "elapsed: " << us << " us\n";
    }
    return 0;
  } catch (const irank::Error& e) {
    return Fail(name, e, options);
  }
}

int RunVerify(const Options& options) {
  std::string matrix_text;
  std::string report_text;
  if (!ReadAll(options.input, matrix_text)) {
    std::cerr << "error: cannot read " << options.input << "\n";
    return 1;
  }
  if (!ReadAll(options.report, report_text)) {
    std::cerr << "error: cannot read " << options.report << "\n";
    return 1;
  }
  try {
    const irank::cli::MatrixInput input = irank::cli::ParseMatrixDocument(matrix_text);
    Json report = irank::cli::ParseJsonText(report_text, "report");
    report.erase("elapsed_us");
    const irank::cli::Verdict verdict =
        irank::cli::Verify(report, input, options.budgets);
    Json out;
    out["valid"] = verdict.valid;
    out["reason"] = verdict.reason;
    Emit(out, options);
    return 0;
  } catch (const irank::Error& e) {
    return Fail("verify", e, options);
  }
}

void AddCommonOptions(CLI::App* sub, Options& options) {
  sub->add_option("--input", options.input, "Matrix file, or - for standard input")
      ->capture_default_str();
  sub->add_option("--output", options.output, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--orthant-limit", options.budgets.orthant_limit,
                  "Maximum number of sign orthants or sign pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--branch-limit", options.budgets.branch_limit,
                  "Maximum number of sign branches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--h-cap", options.budgets.h_cap,
                  "Largest h for the brute-force product criterion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--grid-limit", options.budgets.grid_limit,
                  "Maximum number of representative grid points or realizations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--elimination-limit", options.budgets.elimination_limit,
                  "Maximum number of constraints per elimination stage")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--diagonal-limit", options.budgets.diagonal_limit,
                  "Maximum number of enumerated partial diagonals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank analysis of interval and subset matrices"};
  app.require_subcommand(1);
  Options options;

  std::vector<std::pair<CLI::App*, irank::cli::Command>> analyses;
  const std::map<std::string_view, std::string> help = {
      {"fullrank", "Decide whether every contained matrix has full rank"},
      {"rankone", "Decide whether a rank-one matrix is contained"},
      {"rankone-witness",
       "Rank-one witness or product violation for a reduced nonnegative matrix"},
      {"maxrank", "Maximal rank of the contained matrices, with a witness"},
      {"rankrange", "Bounds on the attained ranks, with witnesses"},
      {"singular-witness", "Rational contained matrix of deficient rank"},
      {"detc", "Determinant restricted to all-degenerate diagonals"},
      {"strongly-singular", "Decide whether every realization is singular"},
  };
  for (std::string_view name : irank::cli::CommandNames()) {
    CLI::App* sub = app.add_subcommand(std::string(name), help.at(name));
    AddCommonOptions(sub, options);
    sub->add_flag("--timing", options.timing, "Include elapsed time in JSON output");
    analyses.emplace_back(sub, *irank::cli::ParseCommand(name));
  }
  CLI::App* verify = app.add_subcommand("verify", "Re-check a report's certificate");
  AddCommonOptions(verify, options);
  verify->add_option("--report", options.report, "Report file to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (verify->parsed()) return RunVerify(options);
  for (const auto& [sub, command] : analyses) {
    if (sub->parsed()) return RunAnalysis(command, options);
  }
  return 1;
}
