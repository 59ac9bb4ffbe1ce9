#include "irank_cli/commands.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "irank/full_rank.h"
#include "irank/linalg.h"
#include "irank/rank_one.h"
#include "irank/rank_range.h"
#include "irank/subset_matrix.h"

namespace irank::cli {

namespace {

struct CommandInfo {
  Command command;
  std::string_view name;
};

constexpr std::array<CommandInfo, 8> kCommands{{
    {Command::kFullRank, "fullrank"},
    {Command::kRankOne, "rankone"},
    {Command::kRankOneWitness, "rankone-witness"},
    {Command::kMaxRank, "maxrank"},
    {Command::kRankRange, "rankrange"},
    {Command::kSingularWitness, "singular-witness"},
    {Command::kDetC, "detc"},
    {Command::kStronglySingular, "strongly-singular"},
}};

constexpr std::string_view kRohnMethod = "sign-pair determinants";
constexpr std::string_view kOrthantMethod = "orthant search";

// Thrown by verifiers; caught in Verify and turned into an invalid verdict.
class Rejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool condition, const std::string& reason) {
  if (!condition) throw Rejection(reason);
}

void RequireKeys(const Json& report, std::initializer_list<std::string_view> keys) {
  Require(report.size() == keys.size(), "report has unexpected or missing fields");
  for (std::string_view key : keys) {
    Require(report.contains(key), "report lacks field \"" + std::string(key) + "\"");
  }
}

const IntervalMatrix& RequireInterval(const MatrixInput& input, Command command) {
  if (const auto* alpha = std::get_if<IntervalMatrix>(&input)) return *alpha;
  throw PreconditionError(std::string(CommandName(command)) +
                          " needs an interval matrix");
}

SubsetMatrix AsSubset(const MatrixInput& input) {
  if (const auto* alpha = std::get_if<IntervalMatrix>(&input)) {
    return IntervalAsSubset(*alpha);
  }
  return std::get<SubsetMatrix>(input);
}

SubsetMatrix AsSquareSubset(const MatrixInput& input, Command command) {
  SubsetMatrix alpha = AsSubset(input);
  if (alpha.rows() != alpha.cols()) {
    throw PreconditionError(std::string(CommandName(command)) +
                            " needs a square matrix");
  }
  return alpha;
}

bool ContainsRealization(const MatrixInput& input, const RationalMatrix& a) {
  if (const auto* alpha = std::get_if<IntervalMatrix>(&input)) {
    return a.rows() == alpha->rows() && a.cols() == alpha->cols() &&
           Contains(*alpha, a);
  }
  return std::get<SubsetMatrix>(input).Contains(a);
}

Json Header(Command command, const MatrixInput& input) {
  Json out;
  out["command"] = CommandName(command);
  out["input"] = DescribeInput(input);
  return out;
}

std::optional<std::uint64_t> CriterionHMax(std::size_t rows, std::size_t cols,
                                           const Budgets& budgets) {
  const std::size_t m = std::min(rows, cols);
  if (m < 2 || m - 1 >= 63) return std::nullopt;
  const std::uint64_t h_max = std::uint64_t{1} << (m - 1);
  if (h_max > budgets.h_cap) return std::nullopt;
  return h_max;
}

// ---------------------------------------------------------------- witnesses

void AddNullPair(Json& out, const NullPair& pair, bool transposed) {
  out["kernel_side"] = transposed ? "left" : "right";
  out["witness_x"] = Encode(pair.x);
  out["witness_A"] = Encode(transposed ? pair.a.Transposed() : pair.a);
}

// Returns the witness matrix after checking it against alpha.
RationalMatrix CheckNullPair(const Json& report, const IntervalMatrix& alpha) {
  const bool transposed = alpha.rows() < alpha.cols();
  Require(Member(report, "kernel_side") == (transposed ? "left" : "right"),
          "kernel_side does not match the matrix shape");
  const RationalVector x = DecodeVector(Member(report, "witness_x"), "witness_x");
  const RationalMatrix a = DecodeMatrix(Member(report, "witness_A"), "witness_A");
  const bool ok = transposed ? VerifyNullPair(alpha.Transposed(), x, a.Transposed())
                             : VerifyNullPair(alpha, x, a);
  Require(ok, "witness_A is not contained or witness_x is not a nonzero null vector");
  return a;
}

std::optional<NullPair> TallNullPair(const IntervalMatrix& alpha,
                                     const Budgets& budgets) {
  return alpha.rows() < alpha.cols() ? NullPairSearch(alpha.Transposed(), budgets)
                                     : NullPairSearch(alpha, budgets);
}

// ---------------------------------------------------------------- fullrank

Json RunFullRank(const IntervalMatrix& alpha, Json out, const Budgets& budgets) {
  const bool square = alpha.rows() == alpha.cols();
  const bool transposed = alpha.rows() < alpha.cols();
  if (square) {
    const RohnResult rohn = RohnSquareFullRank(alpha, budgets);
    out["decision"] = rohn.full_rank;
    out["method"] = kRohnMethod;
    out["det_mid"] = Encode(rohn.det_mid);
    if (!rohn.full_rank) {
      out["violating_signs"] = {{"x", Encode(*rohn.violating_x)},
                                {"y", Encode(*rohn.violating_y)}};
      out["violating_det"] = Encode(*rohn.violating_det);
      const std::optional<NullPair> pair = NullPairSearch(alpha, budgets);
      if (!pair) throw std::logic_error("square test and orthant search disagree");
      AddNullPair(out, *pair, false);
    }
  } else {
    const std::optional<NullPair> pair = TallNullPair(alpha, budgets);
    out["decision"] = !pair.has_value();
    out["method"] = kOrthantMethod;
    if (pair) AddNullPair(out, *pair, transposed);
  }
  return out;
}

void VerifyFullRank(const Json& report, const IntervalMatrix& alpha) {
  const bool square = alpha.rows() == alpha.cols();
  const bool decision = DecodeBool(Member(report, "decision"), "decision");
  Require(Member(report, "method") == (square ? kRohnMethod : kOrthantMethod),
          "method does not match the matrix shape");
  if (square) {
    const MidRadMod parts = ComputeMidRadMod(alpha);
    const Rational det_mid = Determinant(parts.mid);
    Require(DecodeRational(Member(report, "det_mid"), "det_mid") == det_mid,
            "det_mid is not the midpoint determinant");
    if (decision) {
      RequireKeys(report, {"command", "input", "decision", "method", "det_mid"});
      return;
    }
    RequireKeys(report, {"command", "input", "decision", "method", "det_mid",
                         "violating_signs", "violating_det", "kernel_side",
                         "witness_x", "witness_A"});
    const Json& signs = Member(report, "violating_signs");
    Require(signs.is_object() && signs.size() == 2, "violating_signs needs x and y");
    const SignVector x = DecodeSigns(Member(signs, "x"), "violating_signs.x");
    const SignVector y = DecodeSigns(Member(signs, "y"), "violating_signs.y");
    Require(x.size() == alpha.rows() && y.size() == alpha.rows(),
            "violating sign vectors have the wrong length");
    Require(x[0] == 1, "violating_signs.x must start with +1");
    const Rational det = Determinant(RohnVertexMatrix(parts, x, y));
    Require(DecodeRational(Member(report, "violating_det"), "violating_det") == det,
            "violating_det does not match the sign pair");
    Require((det_mid * det).sign() <= 0, "sign pair does not violate the test");
  } else {
    if (decision) {
      RequireKeys(report, {"command", "input", "decision", "method"});
      return;
    }
    RequireKeys(report, {"command", "input", "decision", "method", "kernel_side",
                         "witness_x", "witness_A"});
  }
  CheckNullPair(report, alpha);
}

// --------------------------------------------------------- singular-witness

Json RunSingularWitness(const IntervalMatrix& alpha, Json out,
                        const Budgets& budgets) {
  const std::optional<NullPair> pair = TallNullPair(alpha, budgets);
  out["decision"] = pair.has_value();
  if (pair) {
    AddNullPair(out, *pair, alpha.rows() < alpha.cols());
    out["rank"] = ExactRank(pair->a);
  }
  return out;
}

void VerifySingularWitness(const Json& report, const IntervalMatrix& alpha) {
  if (!DecodeBool(Member(report, "decision"), "decision")) {
    RequireKeys(report, {"command", "input", "decision"});
    return;
  }
  RequireKeys(report, {"command", "input", "decision", "kernel_side", "witness_x",
                       "witness_A", "rank"});
  const RationalMatrix a = CheckNullPair(report, alpha);
  Require(DecodeIndex(Member(report, "rank"), "rank") == ExactRank(a),
          "rank does not match witness_A");
}

// ----------------------------------------------------------------- rankone

Json RunRankOne(const IntervalMatrix& alpha, Json out, const Budgets& budgets) {
  const RankOneAnalysis analysis = RankOneAny(alpha, budgets);
  out["decision"] = analysis.exists;
  if (analysis.exists) {
    out["witness"] = Encode(*analysis.witness);
    return out;
  }
  out["reduced_rows"] = EncodeIndices(analysis.reduced_rows);
  out["reduced_cols"] = EncodeIndices(analysis.reduced_cols);
  out["all_zero"] = analysis.all_zero;
  out["branch_count"] = analysis.branch_count;
  Json branches = Json::array();
  for (const BranchRefutation& r : analysis.refutations) {
    Json b;
    b["index"] = r.index;
    b["row_signs"] = Json(r.signs.row_signs);
    b["col_signs"] = Json(r.signs.col_signs);
    if (r.negative_cell) {
      b["negative_cell"] = Encode(*r.negative_cell);
    } else {
      b["violation"] = Encode(*r.violation);
    }
    branches.push_back(std::move(b));
  }
  out["branches"] = std::move(branches);
  return out;
}

std::vector<int> DecodeIntSigns(const Json& j, const std::string& field) {
  return DecodeSigns(j, field).components();
}

// A refuted branch: after the recorded sign flips, the first row and column
// are nonnegative, so every rank-one matrix in the reduced branch has
// strictly positive entries there, and thus everywhere.
void VerifyBranch(const Json& b, std::uint64_t index, const IntervalMatrix& branch) {
  const std::string where = "branches[" + std::to_string(index) + "]";
  Require(b.is_object(), where + " is not an object");
  Require(DecodeIndex(Member(b, "index"), where + ".index") == index,
          where + " has the wrong index");
  const SignRecord signs{DecodeIntSigns(Member(b, "row_signs"), where + ".row_signs"),
                         DecodeIntSigns(Member(b, "col_signs"), where + ".col_signs")};
  const NormalizeOutcome expected = NormalizeAndClamp(branch);
  Require(signs == expected.signs, where + " sign record is not the normalizing one");
  const IntervalMatrix signed_branch = ApplySigns(branch, signs);
  for (std::size_t j = 0; j < signed_branch.cols(); ++j) {
    Require(signed_branch(0, j).IsNonnegative(), where + " first row is not nonnegative");
  }
  for (std::size_t i = 0; i < signed_branch.rows(); ++i) {
    Require(signed_branch(i, 0).IsNonnegative(),
            where + " first column is not nonnegative");
  }
  if (expected.negative_cell) {
    Require(b.size() == 4 && b.contains("negative_cell"),
            where + " must name its negative cell");
    const Cell c = DecodeCell(Member(b, "negative_cell"), where + ".negative_cell");
    Require(c == *expected.negative_cell, where + " negative_cell is not the first one");
    Require(signed_branch(c.row, c.col).hi().sign() < 0,
            where + " negative_cell is not negative");
    return;
  }
  Require(b.size() == 4 && b.contains("violation"), where + " must carry a violation");
  const CriterionViolation v = DecodeViolation(Member(b, "violation"),
                                               where + ".violation");
  Require(VerifyViolation(*expected.clamped, v),
          where + " violation does not hold on the clamped branch");
}

void VerifyRankOne(const Json& report, const IntervalMatrix& alpha,
                   const Budgets& budgets) {
  if (DecodeBool(Member(report, "decision"), "decision")) {
    RequireKeys(report, {"command", "input", "decision", "witness"});
    Require(VerifyRankOneWitness(alpha, DecodeWitness(Member(report, "witness"),
                                                      "witness")),
            "witness is not a contained rank-one matrix");
    return;
  }
  RequireKeys(report, {"command", "input", "decision", "reduced_rows", "reduced_cols",
                       "all_zero", "branch_count", "branches"});
  const Reduction reduction = ReduceZeroRowsCols(alpha);
  Require(DecodeIndices(Member(report, "reduced_rows"), "reduced_rows") ==
                  reduction.rows &&
              DecodeIndices(Member(report, "reduced_cols"), "reduced_cols") ==
                  reduction.cols,
          "reduced rows or columns do not match the reduction");
  const bool all_zero = DecodeBool(Member(report, "all_zero"), "all_zero");
  const Json& branches = Member(report, "branches");
  Require(branches.is_array(), "branches must be an array");
  const std::uint64_t count = DecodeIndex(Member(report, "branch_count"), "branch_count");
  if (reduction.empty()) {
    bool zero = true;
    for (std::size_t i = 0; i < alpha.rows(); ++i) {
      for (std::size_t j = 0; j < alpha.cols(); ++j) {
        zero &= alpha(i, j).lo().is_zero() && alpha(i, j).hi().is_zero();
      }
    }
    Require(zero && all_zero, "some entry admits a nonzero value");
    Require(count == 0 && branches.empty(), "an all-zero matrix has no branches");
    return;
  }
  Require(!all_zero, "all_zero is set but the reduction is nonempty");
  const IntervalMatrix& reduced = reduction.matrix;
  Require(reduced.rows() >= 2 && reduced.cols() >= 2,
          "a reduced matrix with one row or column contains a rank-one matrix");
  const SignBranches split(reduced);
  Require(count == split.size(), "branch_count does not match the sign split");
  if (count > budgets.branch_limit) {
    throw SizeLimitExceededError(std::to_string(count) +
                                 " sign branches exceed the limit of " +
                                 std::to_string(budgets.branch_limit));
  }
  Require(branches.size() == count, "every branch needs a refutation");
  for (std::uint64_t k = 0; k < count; ++k) VerifyBranch(branches[k], k, split[k]);
}

// --------------------------------------------------------- rankone-witness

bool IsReducedNonnegative(const IntervalMatrix& alpha) {
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (const Interval& x : alpha.row(i)) {
      if (!x.IsNonnegative()) return false;
    }
  }
  return IsReduced(alpha);
}

Json RunRankOneWitness(const IntervalMatrix& alpha, Json out, const Budgets& budgets) {
  const FeasibilityResult result = RankOneFeasibilityWitness(alpha);
  out["decision"] = result.witness.has_value();
  if (result.witness) {
    out["witness"] = Encode(*result.witness);
  } else {
    out["violation"] = Encode(*result.violation);
  }
  if (const auto h_max = CriterionHMax(alpha.rows(), alpha.cols(), budgets)) {
    const CriterionResult criterion = RankOneCriterionBruteForce(alpha, budgets);
    if (criterion.holds != result.witness.has_value()) {
      throw std::logic_error("criterion and feasibility search disagree");
    }
    out["criterion_check"] = {{"h_max", *h_max}, {"holds", criterion.holds}};
  } else {
    out["criterion_check"] = "skipped";
  }
  return out;
}

void VerifyRankOneWitnessReport(const Json& report, const IntervalMatrix& alpha,
                                const Budgets& budgets) {
  const bool decision = DecodeBool(Member(report, "decision"), "decision");
  const Json& check = Member(report, "criterion_check");
  const auto h_max = CriterionHMax(alpha.rows(), alpha.cols(), budgets);
  if (check.is_string()) {
    Require(check == "skipped", "criterion_check is malformed");
  } else {
    Require(check.is_object() && check.size() == 2, "criterion_check is malformed");
    Require(h_max && DecodeIndex(Member(check, "h_max"), "criterion_check.h_max") ==
                         *h_max,
            "criterion_check.h_max is not 2^(min(p,q)-1)");
    Require(DecodeBool(Member(check, "holds"), "criterion_check.holds") == decision,
            "criterion_check contradicts the decision");
  }
  if (decision) {
    RequireKeys(report, {"command", "input", "decision", "witness", "criterion_check"});
    Require(VerifyRankOneWitness(alpha, DecodeWitness(Member(report, "witness"),
                                                      "witness")),
            "witness is not a contained rank-one matrix");
    return;
  }
  RequireKeys(report, {"command", "input", "decision", "violation", "criterion_check"});
  Require(IsReducedNonnegative(alpha), "matrix is not reduced and nonnegative");
  Require(VerifyViolation(alpha, DecodeViolation(Member(report, "violation"),
                                                 "violation")),
          "violation does not hold");
}

// ----------------------------------------------------------------- maxrank

Json RunMaxRank(const MatrixInput& input, Json out, const Budgets& budgets) {
  const SubsetMatrix alpha = AsSubset(input);
  const MaxRankResult cert = MaxRank(alpha, budgets);
  out["value"] = cert.rank;
  out["rows"] = EncodeIndices(cert.rows);
  out["cols"] = EncodeIndices(cert.cols);
  out["diagonal"] = Encode(cert.diagonal);
  if (cert.diagonal.length() < cert.rank) {
    const SubsetMatrix sub = alpha.Submatrix(cert.rows, cert.cols);
    out["complement_detc"] = Encode(DetC(ComplementaryMatrix(sub, cert.diagonal)));
  }
  out["witness"] = Encode(MaxRankWitness(alpha, cert, budgets));
  return out;
}

bool StrictlyIncreasingBelow(const std::vector<std::size_t>& v, std::size_t bound) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] >= bound || (k > 0 && v[k] <= v[k - 1])) return false;
  }
  return true;
}

// Checks that d certifies that square alpha is not strongly singular.
void CheckNonsingularDiagonal(const Json& report, const SubsetMatrix& alpha,
                              const PgDiagonal& d) {
  ValidateDiagonal(alpha, d);
  Require(IsTotallyNondegenerate(alpha, d), "diagonal has a degenerate cell");
  if (d.length() == alpha.rows()) {
    Require(!report.contains("complement_detc"),
            "a full-length diagonal has no complementary matrix");
    return;
  }
  const Rational value = DetC(ComplementaryMatrix(alpha, d));
  Require(report.contains("complement_detc") &&
              DecodeRational(Member(report, "complement_detc"), "complement_detc") ==
                  value,
          "complement_detc does not match the complementary matrix");
  Require(!value.is_zero(), "complementary matrix has det^c = 0");
}

void VerifyMaxRank(const Json& report, const MatrixInput& input) {
  const SubsetMatrix alpha = AsSubset(input);
  const std::size_t t = DecodeIndex(Member(report, "value"), "value");
  const std::vector<std::size_t> rows = DecodeIndices(Member(report, "rows"), "rows");
  const std::vector<std::size_t> cols = DecodeIndices(Member(report, "cols"), "cols");
  Require(rows.size() == t && cols.size() == t &&
              StrictlyIncreasingBelow(rows, alpha.rows()) &&
              StrictlyIncreasingBelow(cols, alpha.cols()),
          "rows and cols do not select a value x value submatrix");
  const PgDiagonal d = DecodeDiagonal(Member(report, "diagonal"), "diagonal");
  const SubsetMatrix sub = alpha.Submatrix(rows, cols);
  CheckNonsingularDiagonal(report, sub, d);
  if (d.length() == t) {
    RequireKeys(report, {"command", "input", "value", "rows", "cols", "diagonal",
                         "witness"});
  } else {
    RequireKeys(report, {"command", "input", "value", "rows", "cols", "diagonal",
                         "complement_detc", "witness"});
  }
  const RationalMatrix w = DecodeMatrix(Member(report, "witness"), "witness");
  Require(ContainsRealization(input, w), "witness is not contained in the matrix");
  Require(ExactRank(w, alpha.field()) == t, "witness rank differs from value");
}

// --------------------------------------------------------------- rankrange

Json RunRankRange(const IntervalMatrix& alpha, Json out, const Budgets& budgets) {
  const RankRangeReport report = RankRange(alpha, budgets);
  out["max_rank"] = report.max_rank;
  out["min_rank_lower"] = report.min_rank_lower;
  out["min_rank_upper"] = report.min_rank_upper;
  Json decided = Json::array();
  for (const auto& [rank, witness] : report.decided_ranks) {
    decided.push_back({{"rank", rank}, {"witness", Encode(witness)}});
  }
  out["decided_ranks"] = std::move(decided);
  return out;
}

void VerifyRankRange(const Json& report, const IntervalMatrix& alpha) {
  RequireKeys(report, {"command", "input", "max_rank", "min_rank_lower",
                       "min_rank_upper", "decided_ranks"});
  RankRangeReport r;
  r.max_rank = DecodeIndex(Member(report, "max_rank"), "max_rank");
  r.min_rank_lower = DecodeIndex(Member(report, "min_rank_lower"), "min_rank_lower");
  r.min_rank_upper = DecodeIndex(Member(report, "min_rank_upper"), "min_rank_upper");
  const Json& decided = Member(report, "decided_ranks");
  Require(decided.is_array(), "decided_ranks must be an array");
  for (std::size_t k = 0; k < decided.size(); ++k) {
    const std::string where = "decided_ranks[" + std::to_string(k) + "]";
    Require(decided[k].is_object() && decided[k].size() == 2, where + " is malformed");
    const std::size_t rank = DecodeIndex(Member(decided[k], "rank"), where + ".rank");
    Require(r.decided_ranks.empty() || rank > r.decided_ranks.rbegin()->first,
            "decided_ranks is not strictly increasing");
    r.decided_ranks[rank] = DecodeMatrix(Member(decided[k], "witness"),
                                         where + ".witness");
  }
  Require(VerifyRankRangeReport(alpha, r),
          "rank bounds are inconsistent or a witness fails");
  bool all_contain_zero = true;
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (const Interval& x : alpha.row(i)) all_contain_zero &= x.ContainsZero();
  }
  Require(all_contain_zero == (r.min_rank_lower == 0),
          "min_rank_lower disagrees with the zero-matrix test");
}

// -------------------------------------------------------------------- detc

Json RunDetC(const MatrixInput& input, Json out) {
  out["value"] = Encode(DetC(AsSquareSubset(input, Command::kDetC)));
  return out;
}

void VerifyDetC(const Json& report, const MatrixInput& input) {
  RequireKeys(report, {"command", "input", "value"});
  Require(DecodeRational(Member(report, "value"), "value") ==
              DetC(AsSquareSubset(input, Command::kDetC)),
          "value is not det^c of the matrix");
}

// ------------------------------------------------------- strongly-singular

Json RunStronglySingular(const MatrixInput& input, Json out, const Budgets& budgets) {
  const SubsetMatrix alpha = AsSquareSubset(input, Command::kStronglySingular);
  const SingularityResult result = StronglySingular(alpha, budgets);
  out["decision"] = result.strongly_singular;
  if (result.strongly_singular) return out;
  out["diagonal"] = Encode(*result.diagonal);
  if (result.complement_detc) out["complement_detc"] = Encode(*result.complement_detc);
  MaxRankResult cert;
  cert.rank = alpha.rows();
  for (std::size_t k = 0; k < alpha.rows(); ++k) {
    cert.rows.push_back(k);
    cert.cols.push_back(k);
  }
  cert.diagonal = *result.diagonal;
  out["witness"] = Encode(MaxRankWitness(alpha, cert, budgets));
  return out;
}

void VerifyStronglySingular(const Json& report, const MatrixInput& input) {
  const SubsetMatrix alpha = AsSquareSubset(input, Command::kStronglySingular);
  if (DecodeBool(Member(report, "decision"), "decision")) {
    RequireKeys(report, {"command", "input", "decision"});
    return;
  }
  const PgDiagonal d = DecodeDiagonal(Member(report, "diagonal"), "diagonal");
  CheckNonsingularDiagonal(report, alpha, d);
  if (d.length() == alpha.rows()) {
    RequireKeys(report, {"command", "input", "decision", "diagonal", "witness"});
  } else {
    RequireKeys(report, {"command", "input", "decision", "diagonal",
                         "complement_detc", "witness"});
  }
  const RationalMatrix w = DecodeMatrix(Member(report, "witness"), "witness");
  Require(ContainsRealization(input, w), "witness is not contained in the matrix");
  Require(!Determinant(w, alpha.field()).is_zero(), "witness is singular");
}

// ------------------------------------------------------------------- text

void RenderValue(std::ostringstream& os, const Json& v, int indent);

bool IsStringMatrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const Json& row : v) {
    if (!row.is_array() || row.empty()) return false;
    for (const Json& x : row) {
      if (!x.is_string()) return false;
    }
  }
  return true;
}

std::string Inline(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out += ", ";
      out += Inline(v[k]);
    }
    return out + "]";
  }
  return v.dump();
}

void RenderValue(std::ostringstream& os, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) {
      if (item.is_object() || IsStringMatrix(item) ||
          (item.is_array() && !item.empty() && item[0].is_object())) {
        os << pad << key << ":\n";
        RenderValue(os, item, indent + 2);
      } else {
        os << pad << key << ": " << Inline(item) << "\n";
      }
    }
  } else if (IsStringMatrix(v)) {
    for (const Json& row : v) os << pad << Inline(row) << "\n";
  } else if (v.is_array()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << pad << "- #" << k << "\n";
      RenderValue(os, v[k], indent + 2);
    }
  } else {
    os << pad << Inline(v) << "\n";
  }
}

}  // namespace

std::optional<Command> ParseCommand(std::string_view name) {
  for (const CommandInfo& info : kCommands) {
    if (info.name == name) return info.command;
  }
  return std::nullopt;
}

std::string_view CommandName(Command command) {
  for (const CommandInfo& info : kCommands) {
    if (info.command == command) return info.name;
  }
  return "unknown";
}

std::vector<std::string_view> CommandNames() {
  std::vector<std::string_view> out;
  for (const CommandInfo& info : kCommands) out.push_back(info.name);
  return out;
}

Json Run(Command command, const MatrixInput& input, const Budgets& budgets) {
  Json out = Header(command, input);
  switch (command) {
    case Command::kFullRank:
      return RunFullRank(RequireInterval(input, command), std::move(out), budgets);
    case Command::kRankOne:
      return RunRankOne(RequireInterval(input, command), std::move(out), budgets);
    case Command::kRankOneWitness:
      return RunRankOneWitness(RequireInterval(input, command), std::move(out),
                               budgets);
    case Command::kMaxRank:
      return RunMaxRank(input, std::move(out), budgets);
    case Command::kRankRange:
      return RunRankRange(RequireInterval(input, command), std::move(out), budgets);
    case Command::kSingularWitness:
      return RunSingularWitness(RequireInterval(input, command), std::move(out),
                                budgets);
    case Command::kDetC:
      return RunDetC(input, std::move(out));
    case Command::kStronglySingular:
      return RunStronglySingular(input, std::move(out), budgets);
  }
  throw std::logic_error("unhandled command");
}

Verdict Verify(const Json& report, const MatrixInput& input, const Budgets& budgets) {
  try {
    Require(report.is_object(), "report is not a JSON object");
    Require(!report.contains("error"), "report records a failed analysis");
    const Json& name = Member(report, "command");
    Require(name.is_string(), "command must be a string");
    const std::optional<Command> command = ParseCommand(name.get<std::string>());
    Require(command.has_value(), "unknown command " + name.dump());
    Require(Member(report, "input") == DescribeInput(input),
            "input description does not match the matrix");
    switch (*command) {
      case Command::kFullRank:
        VerifyFullRank(report, RequireInterval(input, *command));
        break;
      case Command::kRankOne:
        VerifyRankOne(report, RequireInterval(input, *command), budgets);
        break;
      case Command::kRankOneWitness:
        VerifyRankOneWitnessReport(report, RequireInterval(input, *command), budgets);
        break;
      case Command::kMaxRank:
        VerifyMaxRank(report, input);
        break;
      case Command::kRankRange:
        VerifyRankRange(report, RequireInterval(input, *command));
        break;
      case Command::kSingularWitness:
        VerifySingularWitness(report, RequireInterval(input, *command));
        break;
      case Command::kDetC:
        VerifyDetC(report, input);
        break;
      case Command::kStronglySingular:
        VerifyStronglySingular(report, input);
        break;
    }
  } catch (const Rejection& r) {
    return {false, r.what()};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSizeLimitExceeded ||
        e.kind() == ErrorKind::kEliminationBlowup) {
      throw;
    }
    return {false, e.what()};
  }
  return {true, "certificate verified"};
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return 2;
    case ErrorKind::kInvalidValue:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kDivisorContainsZero:
    case ErrorKind::kZeroScale:
    case ErrorKind::kInvalidDiagonal:
      return 3;
    case ErrorKind::kSizeLimitExceeded:
    case ErrorKind::kEliminationBlowup:
      return 4;
    case ErrorKind::kPreconditionViolated:
      return 1;
  }
  return 1;
}

Json ErrorReport(std::string_view command, const Error& error) {
  Json out;
  out["command"] = command;
  out["error"] = {{"kind", ErrorKindName(error.kind())}, {"message", error.what()}};
  out["budget_exhausted"] = ExitCode(error.kind()) == 4;
  return out;
}

std::string RenderText(const Json& report) {
  std::ostringstream os;
  RenderValue(os, report, 0);
  return os.str();
}

}  // namespace irank::cli
