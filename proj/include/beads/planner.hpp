#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/rational.hpp"

namespace beads {

struct SplitEvent {
  std::size_t bead;   // crossing index k (global, 1-based)
  std::size_t depth;  // recursion depth at which the crossing was found

  friend bool operator==(const SplitEvent&, const SplitEvent&) = default;
};

// Book-keeping for one recursion level, i.e. one bead segment lo..hi.
struct LevelStats {
  std::size_t lo;
  std::size_t hi;
  std::size_t depth;
  std::size_t sweeps_used;
  std::size_t sweep_bound;
};

struct PlanResult {
  SlidePlan plan;
  std::size_t sweeps_used = 0;  // summed over levels
  std::size_t sweep_bound = 0;  // summed over levels
  std::vector<SplitEvent> split_trace;
  std::vector<LevelStats> levels;
};

struct PredecessorInterval {
  std::size_t bead;
  Rational lower;  // closed
  Rational upper;  // open
  bool empty;
};

enum class VerifyFailure { InadmissibleStep, LeftBBox, WrongTerminal };

constexpr std::string_view to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::InadmissibleStep: return "InadmissibleStep";
    case VerifyFailure::LeftBBox: return "LeftBBox";
    case VerifyFailure::WrongTerminal: return "WrongTerminal";
  }
  return "Unknown";
}

struct VerificationReport {
  bool ok = true;
  std::optional<std::size_t> failing_step;  // 1-based
  std::optional<VerifyFailure> reason;
};

// M_k: slide bead k to the midpoint of its neighbours X_{k-1}, X_{k+1}.
inline std::pair<SlideMove, BeadConfig> midpoint_move(const BeadConfig& x, std::size_t k) {
  if (k < 1 || k >= x.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "midpoint bead " + std::to_string(k) + " not in 1.." + std::to_string(x.size() - 1));
  SlideMove move{k, midpoint(x[k - 1], x[k + 1]) - x[k]};
  return {move, apply_slide(x, move)};
}

// T = M_1 o ... o M_{m-1}: midpoint moves from bead m-1 down to bead 1.
// Only moves with delta > 0 are returned.
inline std::pair<std::vector<SlideMove>, BeadConfig> sweep_T(const BeadConfig& x) {
  if (x.size() < 2) throw Error(ErrorKind::TooFewBeads, "sweep needs at least two beads");
  std::vector<SlideMove> moves;
  BeadConfig cur = x;
  for (std::size_t k = x.size() - 1; k >= 1; --k) {
    auto [move, next] = midpoint_move(cur, k);
    if (move.delta.sign() > 0) moves.push_back(std::move(move));
    cur = std::move(next);
  }
  return {std::move(moves), std::move(cur)};
}

// Number of full sweeps after which a segment of m >= 3 beads must have
// crossed its target: lambda shrinks by (1 - 2^{1-m}) per sweep but cannot
// drop below lambda_B / (m - 1) while the last bead is pinned.
inline std::size_t sweep_bound(std::size_t m, const Rational& lambda_start, const Rational& lambda_target) {
  if (m < 3) return 0;
  if (lambda_target.sign() <= 0)
    throw std::logic_error("sweep_bound: target spread must be positive");
  const Rational ratio = Rational(static_cast<long>(m - 1)) * lambda_start / lambda_target;
  // log of an mpq without overflowing double: split numerator and denominator.
  auto log_mpz = [](const mpz_class& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  };
  double log_ratio = log_mpz(ratio.numerator()) - log_mpz(ratio.denominator());
  if (log_ratio < 0) log_ratio = 0;
  const double rate = -std::log1p(-std::ldexp(1.0, -static_cast<int>(m - 1)));
  return static_cast<std::size_t>(std::ceil(log_ratio / rate)) + 1;
}

namespace detail {

class Planner {
 public:
  // budget == nullopt: proven mode, the precomputed bound is enforced.
  Planner(const BeadConfig& source, const BeadConfig& target, std::optional<std::size_t> budget)
      : x_(source.positions().begin(), source.positions().end()), target_(target), budget_(budget) {}

  std::optional<PlanResult> run() {
    if (!segment(1, target_.size(), 0)) return std::nullopt;
    for (const auto& level : result_.levels) {
      result_.sweeps_used += level.sweeps_used;
      result_.sweep_bound += level.sweep_bound;
    }
    return std::move(result_);
  }

 private:
  const Rational& pos(std::size_t k) const { return k == 0 ? target_.mu() : x_[k - 1]; }
  const Rational& goal(std::size_t k) const { return target_[k]; }

  void emit(std::size_t k, Rational delta) {
    const std::size_t n = x_.size();
    if (k < n) {
      Rational room = (pos(k + 1) - pos(k)) - (pos(k) - pos(k - 1));
      if (Rational(2) * delta > room)
        throw std::logic_error("planner emitted an inadmissible slide at bead " + std::to_string(k));
    }
    x_[k - 1] += delta;
    result_.plan.moves.push_back(SlideMove{k, std::move(delta)});
  }

  bool segment(std::size_t lo, std::size_t hi, std::size_t depth) {
    if (lo > hi) return true;
    const std::size_t m = hi - lo + 1;
    // the base point of a segment is already in place
    const Rational& base = pos(lo - 1);

    if (pos(hi) < goal(hi)) emit(hi, goal(hi) - pos(hi));
    if (m <= 2) {
      if (m == 2 && pos(lo) < goal(lo)) emit(lo, goal(lo) - pos(lo));
      result_.levels.push_back({lo, hi, depth, 0, 0});
      return true;
    }

    auto seg_gap = [&](std::size_t k, bool of_target) {
      const Rational& left = k == lo ? base : (of_target ? goal(k - 1) : pos(k - 1));
      return (of_target ? goal(k) : pos(k)) - left;
    };
    const Rational lambda_target = seg_gap(hi, true) - seg_gap(lo, true);
    std::size_t limit = 0;
    if (budget_) {
      limit = *budget_;
    } else {
      for (std::size_t k = lo + 2; k <= hi; ++k)
        if (!(seg_gap(k, true) > seg_gap(k - 2, true)))
          throw std::logic_error("planner: sub-target lost the slideable condition");
      limit = sweep_bound(m, seg_gap(hi, false) - seg_gap(lo, false), lambda_target);
    }

    const std::size_t level_index = result_.levels.size();
    result_.levels.push_back({lo, hi, depth, 0, limit});
    std::size_t& sweeps = result_.levels[level_index].sweeps_used;

    for (;;) {
      bool done = true;
      for (std::size_t k = lo; k <= hi && done; ++k) done = pos(k) == goal(k);
      if (done) return true;

      for (std::size_t k = lo; k < hi; ++k) {
        if (pos(k) == goal(k)) {
          result_.split_trace.push_back({k, depth});
          return segment(lo, k, depth + 1) && segment(k + 1, hi, depth + 1);
        }
      }

      if (sweeps >= limit) {
        if (budget_) return false;
        throw Error(ErrorKind::InternalBoundExceeded,
                    "segment " + std::to_string(lo) + ".." + std::to_string(hi) + " used " +
                        std::to_string(sweeps) + " sweeps, bound " + std::to_string(limit));
      }
      ++sweeps;

      bool moved = false;
      bool crossed = false;
      for (std::size_t k = hi - 1; k >= lo && !crossed; --k) {
        Rational t = midpoint(pos(k - 1), pos(k + 1));
        if (t >= goal(k)) {
          // clamp: this B-move lands exactly on the target coordinate
          if (pos(k) < goal(k)) emit(k, goal(k) - pos(k));
          crossed = true;
        } else if (t > pos(k)) {
          emit(k, t - pos(k));
          moved = true;
        }
        if (k == lo) break;
      }
      if (!crossed && !moved) {
        // equidistant fixed point strictly below the target: no crossing ever
        if (budget_) return false;
        throw Error(ErrorKind::InternalBoundExceeded, "sweep reached a fixed point without crossing");
      }
    }
  }

  std::vector<Rational> x_;
  const BeadConfig& target_;
  std::optional<std::size_t> budget_;
  PlanResult result_;
};

}  // namespace detail

// Replays p from a. ok iff every step is admissible, stays <= b, and the
// final configuration equals b.
inline VerificationReport verify_plan(const BeadConfig& a, const SlidePlan& p, const BeadConfig& b) {
  if (a.size() != b.size() || a.mu() != b.mu()) return {false, std::nullopt, VerifyFailure::WrongTerminal};
  BeadConfig cur = a;
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    try {
      cur = apply_slide(cur, p.moves[i]);
    } catch (const Error&) {
      return {false, i + 1, VerifyFailure::InadmissibleStep};
    }
    if (!leq(cur, b)) return {false, i + 1, VerifyFailure::LeftBBox};
  }
  if (!(cur == b)) return {false, std::nullopt, VerifyFailure::WrongTerminal};
  return {};
}

namespace detail {

inline PlanResult checked(std::optional<PlanResult> r, const BeadConfig& a, const BeadConfig& b) {
  if (!r) throw std::logic_error("planner returned no certificate in proven mode");
  if (!verify_plan(a, r->plan, b).ok) throw std::logic_error("planner produced a plan that does not verify");
  return std::move(*r);
}

}  // namespace detail

// Certificate for a <= b => a can be slid to b, valid whenever b is a
// slideable target.
inline PlanResult plan(const BeadConfig& a, const BeadConfig& b) {
  if (!leq(a, b)) throw Error(ErrorKind::PreconditionOrder, "source is not <= target");
  if (!is_slideable_target(b))
    throw Error(ErrorKind::PreconditionSlideable, "target has four consecutive equidistant points");
  return detail::checked(detail::Planner(a, b, std::nullopt).run(), a, b);
}

// Best-effort planning with at most max_sweeps sweeps per recursion level.
// nullopt means no certificate was found, not that b is unreachable.
inline std::optional<PlanResult> try_plan(const BeadConfig& a, const BeadConfig& b, std::size_t max_sweeps) {
  if (!leq(a, b)) throw Error(ErrorKind::PreconditionOrder, "source is not <= target");
  auto r = detail::Planner(a, b, max_sweeps).run();
  if (!r) return std::nullopt;
  return detail::checked(std::move(r), a, b);
}

// B(eps)_k = B_k + 2^k eps: always slideable and >= B.
inline BeadConfig epsilon_sleeve(const BeadConfig& b, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(ErrorKind::NonpositiveEpsilon, "epsilon must be positive, got " + eps.str());
  std::vector<Rational> positions;
  positions.reserve(b.size());
  for (std::size_t k = 1; k <= b.size(); ++k)
    positions.push_back(b[k] + Rational::pow2(static_cast<long>(k)) * eps);
  return BeadConfig::make(b.mu(), std::move(positions));
}

inline PlanResult approx_plan(const BeadConfig& a, const BeadConfig& b, const Rational& eps) {
  if (!leq(a, b)) throw Error(ErrorKind::PreconditionOrder, "source is not <= target");
  return plan(a, epsilon_sleeve(b, eps));
}

// Values X_k < B_k for which B is one admissible slide of bead k away.
inline PredecessorInterval one_step_predecessor_interval(const BeadConfig& b, std::size_t k) {
  const std::size_t n = b.size();
  if (k < 1 || k > n)
    throw Error(ErrorKind::IndexOutOfRange, "bead " + std::to_string(k) + " not in 1.." + std::to_string(n));
  // a_{k-1} <= a_k (or X_1 >= mu for k = 1)
  Rational lower = k == 1 ? b.mu() : Rational(2) * b[k - 1] - b[k - 2];
  // a_{k+1} <= a_{k+2}
  if (k + 2 <= n) {
    Rational r = Rational(2) * b[k + 1] - b[k + 2];
    if (r > lower) lower = std::move(r);
  }
  // a_k <= a_{k+1} gives X_k <= (B_{k-1} + B_{k+1}) / 2, which is implied by X_k < B_k.
  Rational upper = b[k];
  const bool empty = !(lower < upper);
  return {k, std::move(lower), std::move(upper), empty};
}

inline bool has_predecessor(const BeadConfig& b) {
  for (std::size_t k = 1; k <= b.size(); ++k)
    if (!one_step_predecessor_interval(b, k).empty) return true;
  return false;
}

// For gaps ending b_{n-3} < b_{n-2} = b_{n-1} = b_n: rebuild the last three
// beads with gaps b_{n-3}, b_{n-2}, b_{n-1}, giving C <= B, C != B.
inline BeadConfig converse_counterexample(const BeadConfig& b) {
  const std::size_t n = b.size();
  if (n < 4) throw Error(ErrorKind::PatternMismatch, "need at least four beads");
  const Rational g3 = b.gap(n - 3), g2 = b.gap(n - 2), g1 = b.gap(n - 1), g0 = b.gap(n);
  if (!(g0 == g1 && g1 == g2) || !(g1 > g3))
    throw Error(ErrorKind::PatternMismatch,
                "gaps must end with b_{n-3} < b_{n-2} = b_{n-1} = b_n");
  std::vector<Rational> c(b.positions().begin(), b.positions().end());
  c[n - 3] = b[n - 3] + g3;
  c[n - 2] = c[n - 3] + g2;
  c[n - 1] = c[n - 2] + g1;
  return BeadConfig::make(b.mu(), std::move(c));
}

}  // namespace beads
