#include "irank/rank_one.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "irank/errors.h"
#include "irank/linalg.h"

namespace irank {

RationalMatrix RankOneWitness::Outer() const {
  RationalMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

bool VerifyViolation(const IntervalMatrix& alpha, const CriterionViolation& v) {
  const std::size_t h = v.rows.size();
  if (h < 2 || v.cols.size() != h || v.sigma.size() != h) return false;
  std::vector<bool> seen(h, false);
  for (std::size_t t = 0; t < h; ++t) {
    if (v.rows[t] >= alpha.rows() || v.cols[t] >= alpha.cols()) return false;
    if (v.sigma[t] >= h || seen[v.sigma[t]]) return false;
    seen[v.sigma[t]] = true;
  }
  Rational lower(1);
  Rational upper(1);
  for (std::size_t t = 0; t < h; ++t) {
    lower *= alpha(v.rows[t], v.cols[t]).lo();
    upper *= alpha(v.rows[t], v.cols[v.sigma[t]]).hi();
  }
  return lower == v.lower_product && upper == v.upper_product && lower > upper;
}

bool VerifyRankOneWitness(const IntervalMatrix& alpha, const RankOneWitness& w) {
  if (w.u.size() != alpha.rows() || w.v.size() != alpha.cols()) return false;
  const RationalMatrix b = w.Outer();
  return Contains(alpha, b) && ExactRank(b) == 1;
}

namespace {

void RequireReducedNonnegative(const IntervalMatrix& alpha) {
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      if (!alpha(i, j).IsNonnegative()) {
        throw PreconditionError(CellName(i, j) + " " + alpha(i, j).ToString() +
                                " is not nonnegative");
      }
    }
  }
  if (alpha.empty() || !IsReduced(alpha)) {
    throw PreconditionError("matrix is not reduced");
  }
}

// Advances a nondecreasing tuple over [0, n); false after the last one.
bool NextMultiset(std::vector<std::size_t>& tuple, std::size_t n) {
  std::size_t k = tuple.size();
  while (k > 0 && tuple[k - 1] == n - 1) --k;
  if (k == 0) return false;
  const std::size_t value = tuple[k - 1] + 1;
  for (std::size_t t = k - 1; t < tuple.size(); ++t) tuple[t] = value;
  return true;
}

}  // namespace

CriterionResult RankOneCriterionBruteForce(const IntervalMatrix& alpha,
                                           const Budgets& budgets) {
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  if (p < 2 || q < 2) {
    throw PreconditionError("criterion needs at least 2 rows and 2 columns");
  }
  RequireReducedNonnegative(alpha);
  const std::size_t m = std::min(p, q);
  if (m - 1 >= 63 || (std::uint64_t{1} << (m - 1)) > budgets.h_cap) {
    throw SizeLimitExceededError("criterion needs h up to 2^" +
                                 std::to_string(m - 1) + ", above the h cap " +
                                 std::to_string(budgets.h_cap));
  }
  const std::size_t h_max = std::size_t{1} << (m - 1);

  CriterionResult result;
  for (std::size_t h = 2; h <= h_max; ++h) {
    std::vector<std::size_t> rows(h, 0);
    do {
      std::vector<std::size_t> cols(h, 0);
      do {
        // Over all arrangements pi of the column multiset, compare the
        // largest lower product with the smallest upper product.
        std::vector<std::size_t> pi(h);
        std::iota(pi.begin(), pi.end(), 0);
        std::optional<Rational> best_lower;
        std::optional<Rational> best_upper;
        std::vector<std::size_t> pi_lower;
        std::vector<std::size_t> pi_upper;
        do {
          Rational lower(1);
          Rational upper(1);
          for (std::size_t t = 0; t < h; ++t) {
            lower *= alpha(rows[t], cols[pi[t]]).lo();
            upper *= alpha(rows[t], cols[pi[t]]).hi();
          }
          if (!best_lower || lower > *best_lower) {
            best_lower = lower;
            pi_lower = pi;
          }
          if (!best_upper || upper < *best_upper) {
            best_upper = upper;
            pi_upper = pi;
          }
        } while (std::next_permutation(pi.begin(), pi.end()));
        if (*best_lower > *best_upper) {
          CriterionViolation v;
          v.rows = rows;
          v.cols.resize(h);
          v.sigma.resize(h);
          std::vector<std::size_t> inverse_lower(h);
          for (std::size_t t = 0; t < h; ++t) {
            v.cols[t] = cols[pi_lower[t]];
            inverse_lower[pi_lower[t]] = t;
          }
          // cols[sigma[t]] must equal the upper arrangement at position t.
          for (std::size_t t = 0; t < h; ++t) {
            v.sigma[t] = inverse_lower[pi_upper[t]];
          }
          v.lower_product = *best_lower;
          v.upper_product = *best_upper;
          result.holds = false;
          result.violation = std::move(v);
          return result;
        }
      } while (NextMultiset(cols, q));
    } while (NextMultiset(rows, p));
  }
  result.holds = true;
  return result;
}

namespace {

// Entry with hi = 0 inside a reduced nonnegative matrix: pair it with the
// positive entries that keep its row and column alive.
CriterionViolation ZeroEntryViolation(const IntervalMatrix& alpha, Cell zero) {
  std::size_t positive_col = 0;
  while (alpha(zero.row, positive_col).lo().sign() <= 0) ++positive_col;
  std::size_t positive_row = 0;
  while (alpha(positive_row, zero.col).lo().sign() <= 0) ++positive_row;
  CriterionViolation v;
  v.rows = {zero.row, positive_row};
  v.cols = {positive_col, zero.col};
  v.sigma = {1, 0};
  v.lower_product = alpha(zero.row, positive_col).lo() *
                    alpha(positive_row, zero.col).lo();
  v.upper_product =
      alpha(zero.row, zero.col).hi() * alpha(positive_row, positive_col).hi();
  return v;
}

}  // namespace

FeasibilityResult RankOneFeasibilityWitness(const IntervalMatrix& alpha) {
  RequireReducedNonnegative(alpha);
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  FeasibilityResult result;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (alpha(i, j).hi().is_zero()) {
        result.violation = ZeroEntryViolation(alpha, {i, j});
        return result;
      }
    }
  }

  // Nodes 0..p-1 hold u_i, nodes p..p+q-1 hold w_j = 1/v_j. An edge
  // (from, to, weight) encodes pot[to] <= weight * pot[from]:
  //   u_i <= hi_ij w_j     and     w_j <= u_i / lo_ij (lo_ij > 0).
  struct Edge {
    std::size_t from;
    std::size_t to;
    Rational weight;
    Cell cell;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      edges.push_back({p + j, i, alpha(i, j).hi(), {i, j}});
      if (alpha(i, j).lo().sign() > 0) {
        edges.push_back({i, p + j, alpha(i, j).lo().inverse(), {i, j}});
      }
    }
  }
  const std::size_t n = p + q;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // A virtual source reaches every node with weight 1.
  std::vector<Rational> pot(n, Rational(1));
  std::vector<std::size_t> pred(n, kNone);
  auto relax_round = [&] {
    bool changed = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& edge = edges[e];
      Rational candidate = edge.weight * pot[edge.from];
      if (candidate < pot[edge.to]) {
        pot[edge.to] = std::move(candidate);
        pred[edge.to] = e;
        changed = true;
      }
    }
    return changed;
  };
  // Any cycle of the predecessor graph has weight product < 1.
  auto find_cycle_node = [&]() -> std::size_t {
    for (std::size_t startv = 0; startv < n; ++startv) {
      std::vector<bool> on_walk(n, false);
      std::size_t node = startv;
      while (node != kNone && !on_walk[node]) {
        on_walk[node] = true;
        node = pred[node] == kNone ? kNone : edges[pred[node]].from;
      }
      if (node != kNone) return node;
    }
    return kNone;
  };

  bool converged = false;
  for (std::size_t round = 0; round < n; ++round) {
    if (!relax_round()) {
      converged = true;
      break;
    }
  }
  std::size_t cycle_node = kNone;
  if (!converged) {
    // Once a pass still relaxes after n passes, the predecessor graph holds
    // a cycle within at most n further passes.
    for (std::size_t round = 0; round <= n && cycle_node == kNone; ++round) {
      if (!relax_round()) {
        converged = true;
        break;
      }
      cycle_node = find_cycle_node();
    }
    if (!converged && cycle_node == kNone) {
      throw std::logic_error("relaxation neither converged nor closed a cycle");
    }
  }

  if (converged) {
    RankOneWitness w{RationalVector(p), RationalVector(q)};
    for (std::size_t i = 0; i < p; ++i) w.u[i] = pot[i];
    for (std::size_t j = 0; j < q; ++j) w.v[j] = pot[p + j].inverse();
    if (!VerifyRankOneWitness(alpha, w)) {
      throw std::logic_error("rank-one potentials failed verification");
    }
    result.witness = std::move(w);
    return result;
  }

  std::vector<Cell> lower_cells;
  std::vector<Cell> upper_cells;
  std::size_t node = cycle_node;
  const std::size_t start = node;
  do {
    const Edge& edge = edges[pred[node]];
    (edge.from < p ? lower_cells : upper_cells).push_back(edge.cell);
    node = edge.from;
  } while (node != start);

  CriterionViolation v;
  const std::size_t h = lower_cells.size();
  v.rows.resize(h);
  v.cols.resize(h);
  v.sigma.resize(h);
  v.lower_product = Rational(1);
  v.upper_product = Rational(1);
  for (std::size_t t = 0; t < h; ++t) {
    v.rows[t] = lower_cells[t].row;
    v.cols[t] = lower_cells[t].col;
    v.lower_product *= alpha(v.rows[t], v.cols[t]).lo();
  }
  // Each cycle row is entered by exactly one upper edge; its column is the
  // column of some lower edge.
  for (std::size_t t = 0; t < h; ++t) {
    const auto up = std::find_if(upper_cells.begin(), upper_cells.end(),
                                 [&](const Cell& c) { return c.row == v.rows[t]; });
    const auto s = std::find(v.cols.begin(), v.cols.end(), up->col);
    v.sigma[t] = static_cast<std::size_t>(s - v.cols.begin());
    v.upper_product *= alpha(up->row, up->col).hi();
  }
  if (!VerifyViolation(alpha, v)) {
    throw std::logic_error("negative cycle failed verification");
  }
  result.violation = std::move(v);
  return result;
}

Rational SimplestNonzero(const Interval& x) {
  if (x.lo().sign() > 0 || x.hi().sign() < 0) {
    return SimplestBetween(x.lo(), x.hi());
  }
  if (x.hi().sign() > 0) return SimplestBetween(x.hi() / Rational(2), x.hi());
  if (x.lo().sign() < 0) return SimplestBetween(x.lo(), x.lo() / Rational(2));
  throw PreconditionError("interval [0, 0] has no nonzero element");
}

namespace {

// Reduced matrices with a single row or column: every contained matrix has
// rank one, so pick the simplest nonzero value on each forced-nonzero line.
RankOneWitness ThinWitness(const IntervalMatrix& reduced) {
  RankOneWitness w{RationalVector(reduced.rows(), Rational(1)),
                   RationalVector(reduced.cols(), Rational(1))};
  auto pick = [](const Interval& x) {
    return x.ContainsZero() ? Rational(0) : SimplestBetween(x.lo(), x.hi());
  };
  if (reduced.cols() == 1) {
    for (std::size_t i = 0; i < reduced.rows(); ++i) w.u[i] = pick(reduced(i, 0));
  } else {
    for (std::size_t j = 0; j < reduced.cols(); ++j) w.v[j] = pick(reduced(0, j));
  }
  return w;
}

RankOneWitness Embed(const RankOneWitness& w, const Reduction& reduction) {
  RankOneWitness out{RationalVector(reduction.original_rows),
                     RationalVector(reduction.original_cols)};
  for (std::size_t i = 0; i < w.u.size(); ++i) out.u[reduction.rows[i]] = w.u[i];
  for (std::size_t j = 0; j < w.v.size(); ++j) out.v[reduction.cols[j]] = w.v[j];
  return out;
}

}  // namespace

RankOneAnalysis RankOneAny(const IntervalMatrix& alpha, const Budgets& budgets) {
  RankOneAnalysis out;
  const Reduction reduction = ReduceZeroRowsCols(alpha);
  out.reduced_rows = reduction.rows;
  out.reduced_cols = reduction.cols;

  auto accept = [&](RankOneWitness w) {
    if (!VerifyRankOneWitness(alpha, w)) {
      throw std::logic_error("rank-one witness failed verification");
    }
    out.exists = true;
    out.witness = std::move(w);
    return out;
  };

  if (reduction.empty()) {
    for (std::size_t i = 0; i < alpha.rows(); ++i) {
      for (std::size_t j = 0; j < alpha.cols(); ++j) {
        const Interval& x = alpha(i, j);
        if (x.lo().is_zero() && x.hi().is_zero()) continue;
        RankOneWitness w{RationalVector(alpha.rows()), RationalVector(alpha.cols())};
        w.u[i] = SimplestNonzero(x);
        w.v[j] = Rational(1);
        return accept(std::move(w));
      }
    }
    out.all_zero = true;
    return out;
  }

  const IntervalMatrix& reduced = reduction.matrix;
  if (reduced.rows() == 1 || reduced.cols() == 1) {
    return accept(Embed(ThinWitness(reduced), reduction));
  }

  const SignBranches branches(reduced);
  out.branch_count = branches.size();
  if (out.branch_count > budgets.branch_limit) {
    throw SizeLimitExceededError(std::to_string(out.branch_count) +
                                 " sign branches exceed the limit of " +
                                 std::to_string(budgets.branch_limit));
  }
  for (std::uint64_t index = 0; index < out.branch_count; ++index) {
    const NormalizeOutcome normalized = NormalizeAndClamp(branches[index]);
    BranchRefutation refutation{index, normalized.signs, normalized.negative_cell,
                                std::nullopt};
    if (normalized.clamped) {
      FeasibilityResult feasible = RankOneFeasibilityWitness(*normalized.clamped);
      if (feasible.witness) {
        RankOneWitness w = std::move(*feasible.witness);
        for (std::size_t i = 0; i < w.u.size(); ++i) {
          w.u[i] *= Rational(normalized.signs.row_signs[i]);
        }
        for (std::size_t j = 0; j < w.v.size(); ++j) {
          w.v[j] *= Rational(normalized.signs.col_signs[j]);
        }
        out.refutations.clear();
        return accept(Embed(w, reduction));
      }
      refutation.violation = std::move(feasible.violation);
    }
    out.refutations.push_back(std::move(refutation));
  }
  return out;
}

}  // namespace irank
