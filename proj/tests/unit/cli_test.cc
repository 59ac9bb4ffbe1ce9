#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "irank/errors.h"
#include "irank_cli/commands.h"
#include "irank_cli/json_io.h"

namespace irank::cli {
namespace {

constexpr const char* kFullRank =
    R"({"type":"interval_matrix","entries":[[["2","4"],["-1","1"]],[["-1","1"],["2","4"]]]})";
constexpr const char* kSingular =
    R"({"type":"interval_matrix","entries":[[["0","2"],["1","1"]],[["1","1"],["0","2"]]]})";
constexpr const char* kContradiction =
    R"({"type":"interval_matrix","entries":[[["2","3"],["0","1"]],[["0","1"],["2","3"]]]})";
constexpr const char* kWide =
    R"({"type":"interval_matrix","entries":[[["1","2"],["0","1"],["1","1"]],[["2","3"],["1","2"],["-1","0"]]]})";
constexpr const char* kGF2 =
    R"({"type":"subset_matrix","field":"GF:2","entries":[[{"set":["0","1"]},{"val":"1"}],[{"val":"1"},{"val":"1"}]]})";
constexpr const char* kQSubset =
    R"({"type":"subset_matrix","field":"Q","entries":[[{"val":"1"},"any"],[{"val":"2"},{"val":"3"}]]})";

TEST(JsonIoTest, ParsesBothKinds) {
  const MatrixInput a = ParseMatrixDocument(kFullRank);
  ASSERT_TRUE(std::holds_alternative<IntervalMatrix>(a));
  EXPECT_EQ(std::get<IntervalMatrix>(a)(0, 1).lo(), Rational(-1));
  const MatrixInput b = ParseMatrixDocument(kGF2);
  ASSERT_TRUE(std::holds_alternative<SubsetMatrix>(b));
  EXPECT_EQ(std::get<SubsetMatrix>(b).field().modulus(), 2u);
}

TEST(JsonIoTest, Errors) {
  EXPECT_THROW(ParseMatrixDocument("{"), ParseError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"interval_matrix","entries":[]})"), ParseError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"interval_matrix","entries":[[["3","1"]]]})"),
               InvalidValueError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"interval_matrix","entries":[[["1","0/0"]]]})"),
               InvalidValueError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"interval_matrix","entries":[[["1","x"]]]})"),
               ParseError);
  EXPECT_THROW(
      ParseMatrixDocument(R"({"type":"interval_matrix","entries":[[["1","1"]],[["1","1"],["1","1"]]]})"),
      DimensionMismatchError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"subset_matrix","field":"GF:2","entries":[["any"]]})"),
               InvalidValueError);
  EXPECT_THROW(ParseMatrixDocument(R"({"type":"subset_matrix","field":"GF:4","entries":[[{"val":"1"}]]})"),
               InvalidValueError);
}

TEST(JsonIoTest, RoundTrip) {
  for (const char* text : {kFullRank, kWide, kGF2, kQSubset}) {
    const MatrixInput input = ParseMatrixDocument(text);
    EXPECT_EQ(EncodeMatrixDocument(ParseMatrixDocument(EncodeMatrixDocument(input).dump())),
              EncodeMatrixDocument(input));
  }
}

TEST(CommandTest, Names) {
  for (std::string_view name : CommandNames()) {
    const auto c = ParseCommand(name);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(CommandName(*c), name);
  }
  EXPECT_FALSE(ParseCommand("bogus").has_value());
}

TEST(CommandTest, EveryReportVerifies) {
  const std::vector<std::pair<Command, const char*>> cases = {
      {Command::kFullRank, kFullRank},        {Command::kFullRank, kSingular},
      {Command::kFullRank, kWide},            {Command::kSingularWitness, kSingular},
      {Command::kSingularWitness, kFullRank}, {Command::kRankOne, kContradiction},
      {Command::kRankOne, kWide},             {Command::kRankOneWitness, kContradiction},
      {Command::kMaxRank, kWide},             {Command::kMaxRank, kGF2},
      {Command::kRankRange, kWide},           {Command::kRankRange, kSingular},
      {Command::kDetC, kQSubset},             {Command::kDetC, kFullRank},
      {Command::kStronglySingular, kGF2},     {Command::kStronglySingular, kQSubset},
  };
  for (const auto& [command, text] : cases) {
    const MatrixInput input = ParseMatrixDocument(text);
    const Json report = cli::Run(command, input);
    EXPECT_EQ(report.at("command"), CommandName(command));
    const Verdict v = Verify(report, input);
    EXPECT_TRUE(v.valid) << CommandName(command) << ": " << v.reason;
  }
}

TEST(CommandTest, Decisions) {
  EXPECT_TRUE(cli::Run(Command::kFullRank, ParseMatrixDocument(kFullRank)).at("decision"));
  EXPECT_EQ(cli::Run(Command::kFullRank, ParseMatrixDocument(kFullRank)).at("det_mid"), "9");
  const Json singular = cli::Run(Command::kFullRank, ParseMatrixDocument(kSingular));
  EXPECT_FALSE(singular.at("decision"));
  EXPECT_EQ(singular.at("kernel_side"), "right");
  EXPECT_FALSE(cli::Run(Command::kRankOne, ParseMatrixDocument(kContradiction)).at("decision"));
  EXPECT_EQ(cli::Run(Command::kDetC, ParseMatrixDocument(kQSubset)).at("value"), "3");
  const Json ss = cli::Run(Command::kStronglySingular, ParseMatrixDocument(kGF2));
  EXPECT_FALSE(ss.at("decision"));
  EXPECT_EQ(ss.at("witness"), Json::parse(R"([["0","1"],["1","1"]])"));
}

TEST(CommandTest, IncompatibleInputs) {
  EXPECT_THROW(cli::Run(Command::kDetC, ParseMatrixDocument(kWide)), PreconditionError);
  EXPECT_THROW(cli::Run(Command::kRankOne, ParseMatrixDocument(kGF2)), PreconditionError);
  EXPECT_THROW(cli::Run(Command::kFullRank, ParseMatrixDocument(kGF2)), PreconditionError);
}

TEST(CommandTest, VerifyRejectsTampering) {
  const MatrixInput input = ParseMatrixDocument(kSingular);
  Json report = cli::Run(Command::kFullRank, input);
  report["decision"] = true;
  EXPECT_FALSE(Verify(report, input).valid);
  report = cli::Run(Command::kFullRank, input);
  report["witness_x"] = Json::array({"0", "0"});
  EXPECT_FALSE(Verify(report, input).valid);
  report = cli::Run(Command::kFullRank, input);
  report["extra"] = 1;
  EXPECT_FALSE(Verify(report, input).valid);
  report = cli::Run(Command::kFullRank, input);
  EXPECT_FALSE(Verify(report, ParseMatrixDocument(kFullRank)).valid);
}

TEST(CommandTest, BudgetErrorsPropagate) {
  Budgets tight;
  tight.orthant_limit = 1;
  EXPECT_THROW(cli::Run(Command::kFullRank, ParseMatrixDocument(kFullRank), tight),
               SizeLimitExceededError);
  EXPECT_EQ(ExitCode(ErrorKind::kSizeLimitExceeded), 4);
  EXPECT_EQ(ExitCode(ErrorKind::kParse), 2);
  EXPECT_EQ(ExitCode(ErrorKind::kInvalidValue), 3);
}

TEST(CommandTest, TextRendering) {
  const std::string text = RenderText(cli::Run(Command::kRankOne, ParseMatrixDocument(kWide)));
  EXPECT_NE(text.find("decision"), std::string::npos);
}

// ------------------------------------------------------------ subprocess

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome RunTool(const std::string& args, const std::string& input_text) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::filesystem::path file = dir / ("irank_cli_test_" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream f(file);
    f << input_text;
  }
  const std::string cmd = std::string(IRANK_TOOL_PATH) + " " + args + " --input " +
                          file.string() + " 2>/dev/null";
  Outcome o;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::filesystem::remove(file);
  return o;
}

TEST(ToolTest, ExitCodes) {
  EXPECT_EQ(RunTool("fullrank", kFullRank).exit_code, 0);
  EXPECT_EQ(RunTool("fullrank", "{").exit_code, 2);
  EXPECT_EQ(RunTool("fullrank", R"({"type":"interval_matrix","entries":[[["1","1/0"]]]})").exit_code, 3);
  EXPECT_EQ(RunTool("fullrank --orthant-limit 1", kFullRank).exit_code, 4);
  EXPECT_EQ(RunTool("detc", kWide).exit_code, 1);
  EXPECT_EQ(RunTool("nosuchcommand", kWide).exit_code, 1);
}

TEST(ToolTest, ErrorReportOnStdout) {
  const Outcome o = RunTool("fullrank --orthant-limit 1", kFullRank);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j.at("error").at("kind"), "SizeLimitExceeded");
  EXPECT_TRUE(j.at("budget_exhausted"));
}

TEST(ToolTest, DeterministicOutput) {
  for (const char* cmd : {"fullrank", "rankone", "maxrank", "rankrange"}) {
    const Outcome a = RunTool(cmd, kWide);
    const Outcome b = RunTool(cmd, kWide);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(ToolTest, VerifySubcommand) {
  const Outcome report = RunTool("rankone", kContradiction);
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / ("irank_report_" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream f(path);
    f << report.out;
  }
  const Outcome v = RunTool("verify --report " + path.string(), kContradiction);
  std::filesystem::remove(path);
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_TRUE(Json::parse(v.out).at("valid"));
}

TEST(ToolTest, TextOutput) {
  const Outcome o = RunTool("maxrank --output text", kGF2);
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("value"), std::string::npos);
  EXPECT_NE(o.out.find("elapsed"), std::string::npos);
}

}  // namespace
}  // namespace irank::cli
