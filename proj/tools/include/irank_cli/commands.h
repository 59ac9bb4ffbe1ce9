#ifndef IRANK_CLI_COMMANDS_H_
#define IRANK_CLI_COMMANDS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irank/budgets.h"
#include "irank/errors.h"
#include "irank_cli/json_io.h"

namespace irank::cli {

enum class Command {
  kFullRank,
  kRankOne,
  kRankOneWitness,
  kMaxRank,
  kRankRange,
  kSingularWitness,
  kDetC,
  kStronglySingular,
};

std::optional<Command> ParseCommand(std::string_view name);
std::string_view CommandName(Command command);
std::vector<std::string_view> CommandNames();

// Runs one analysis and returns its report, certificate included. Throws
// irank::Error for operational failures; PreconditionError signals a
// command that does not accept this kind or shape of input.
Json Run(Command command, const MatrixInput& input, const Budgets& budgets = {});

struct Verdict {
  bool valid = false;
  std::string reason;
};

// Re-checks a report against the matrix it claims to describe. Malformed
// or inconsistent reports are invalid; only budget errors propagate.
Verdict Verify(const Json& report, const MatrixInput& input,
               const Budgets& budgets = {});

// Process exit code for an operational failure.
int ExitCode(ErrorKind kind);

// {"command", "error": {"kind", "message"}, "budget_exhausted"}.
Json ErrorReport(std::string_view command, const Error& error);

// Human-readable rendering of any report.
std::string RenderText(const Json& report);

}  // namespace irank::cli

#endif  // IRANK_CLI_COMMANDS_H_
