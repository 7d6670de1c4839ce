#include <gtest/gtest.h>

#include <random>

#include "beads/beads.hpp"
#include "test_helpers.hpp"

namespace beads {
namespace {

using testing::cfg;
using testing::q;
using testing::qs;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no beads::Error thrown";
  return ErrorKind::MalformedInput;
}

TEST(MidpointMove, Examples) {
  auto [m1, x1] = midpoint_move(cfg("0", {"1", "3", "6"}), 2);
  EXPECT_EQ(m1, (SlideMove{2, q("1/2")}));
  EXPECT_EQ(x1, cfg("0", {"1", "7/2", "6"}));

  auto [m2, x2] = midpoint_move(x1, 1);
  EXPECT_EQ(m2, (SlideMove{1, q("3/4")}));
  EXPECT_EQ(x2, cfg("0", {"7/4", "7/2", "6"}));

  BeadConfig eq = cfg("0", {"1", "2", "3"});
  auto [m3, x3] = midpoint_move(eq, 2);
  EXPECT_TRUE(m3.delta.is_zero());
  EXPECT_EQ(x3, eq);
}

TEST(MidpointMove, RejectsLastBeadAndZero) {
  BeadConfig x = cfg("0", {"1", "3", "6"});
  EXPECT_EQ(kind_of([&] { midpoint_move(x, 3); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { midpoint_move(x, 0); }), ErrorKind::IndexOutOfRange);
}

TEST(SweepT, Examples) {
  // Frozen from a hand application of M_2 then M_1.
  auto [moves, x] = sweep_T(cfg("0", {"1", "3", "6"}));
  EXPECT_EQ(moves, (std::vector<SlideMove>{{2, q("1/2")}, {1, q("3/4")}}));
  EXPECT_EQ(x, cfg("0", {"7/4", "7/2", "6"}));
  EXPECT_EQ(lambda(x), q("3/4"));
  EXPECT_LE(lambda(x), q("3/4") * Rational(2));

  auto [none, fixed] = sweep_T(cfg("0", {"1", "2", "3"}));
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(fixed, cfg("0", {"1", "2", "3"}));

  auto [one, two] = sweep_T(cfg("0", {"2", "10"}));
  EXPECT_EQ(one, (std::vector<SlideMove>{{1, 3}}));
  EXPECT_EQ(two, cfg("0", {"5", "10"}));
  EXPECT_TRUE(lambda(two).is_zero());

  EXPECT_EQ(kind_of([] { sweep_T(cfg("0", {"1"})); }), ErrorKind::TooFewBeads);
}

TEST(Plan, WorkedExample) {
  BeadConfig a = cfg("0", {"1/2", "2", "4"});
  BeadConfig b = cfg("0", {"1", "3", "6"});
  PlanResult r = plan(a, b);
  EXPECT_EQ(r.plan.moves, (std::vector<SlideMove>{{3, 2}, {2, 1}, {1, q("1/2")}}));
  EXPECT_EQ(r.split_trace, (std::vector<SplitEvent>{{2, 0}}));
  EXPECT_EQ(r.sweeps_used, 1u);
  EXPECT_LE(r.sweeps_used, r.sweep_bound);
  EXPECT_TRUE(verify_plan(a, r.plan, b).ok);
}

TEST(Plan, IdentityIsEmpty) {
  BeadConfig b = cfg("0", {"1", "3", "6"});
  PlanResult r = plan(b, b);
  EXPECT_TRUE(r.plan.empty());
  EXPECT_EQ(r.sweeps_used, 0u);
}

TEST(Plan, Preconditions) {
  BeadConfig eq = cfg("0", {"1", "2", "3"});
  EXPECT_EQ(kind_of([&] { plan(eq, eq); }), ErrorKind::PreconditionSlideable);
  EXPECT_EQ(kind_of([] { plan(cfg("0", {"1", "3", "7"}), cfg("0", {"1", "3", "6"})); }),
            ErrorKind::PreconditionOrder);
}

TEST(TryPlan, Examples) {
  BeadConfig eq = cfg("0", {"1", "2", "3"});
  auto same = try_plan(eq, eq, 10);
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->plan.empty());

  auto budget_one = try_plan(cfg("0", {"1/2", "2", "4"}), cfg("0", {"1", "3", "6"}), 1);
  ASSERT_TRUE(budget_one);
  EXPECT_EQ(budget_one->plan.moves, (std::vector<SlideMove>{{3, 2}, {2, 1}, {1, q("1/2")}}));

  EXPECT_FALSE(try_plan(cfg("0", {"1/2", "3/2", "5/2"}), eq, 50));
}

TEST(TryPlan, NoCertificateWhenTargetHasNoPredecessor) {
  BeadConfig b = cfg("0", {"1", "3", "5", "7"});
  ASSERT_FALSE(has_predecessor(b));
  for (const auto& a : enumerate_lattice_configs(4, 0, 2, 7)) {
    if (!leq(a, b) || a == b) continue;
    EXPECT_FALSE(try_plan(a, b, 40));
  }
}

TEST(VerifyPlan, Examples) {
  BeadConfig a = cfg("0", {"1/2", "2", "4"});
  BeadConfig b = cfg("0", {"1", "3", "6"});
  EXPECT_TRUE(verify_plan(a, SlidePlan{{{3, 2}, {2, 1}, {1, q("1/2")}}}, b).ok);

  BeadConfig x = cfg("0", {"1", "3", "6"});
  VerificationReport bad = verify_plan(x, SlidePlan{{{2, 1}}}, cfg("0", {"1", "4", "7"}));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failing_step, 1u);
  EXPECT_EQ(bad.reason, VerifyFailure::InadmissibleStep);

  VerificationReport wrong = verify_plan(a, SlidePlan{}, b);
  EXPECT_EQ(wrong.reason, VerifyFailure::WrongTerminal);

  VerificationReport overshoot = verify_plan(a, SlidePlan{{{3, 3}, {3, -1}}}, b);
  EXPECT_EQ(overshoot.reason, VerifyFailure::LeftBBox);
  EXPECT_EQ(overshoot.failing_step, 1u);
}

TEST(EpsilonSleeve, Examples) {
  BeadConfig s = epsilon_sleeve(cfg("0", {"1", "2", "3"}), q("1/8"));
  EXPECT_EQ(s, cfg("0", {"5/4", "5/2", "4"}));
  EXPECT_EQ(gaps(s), GapVector::make(0, qs({"5/4", "5/4", "3/2"})));
  EXPECT_TRUE(is_slideable_target(s));

  EXPECT_EQ(kind_of([] { epsilon_sleeve(cfg("0", {"1", "3", "6"}), 0); }), ErrorKind::NonpositiveEpsilon);
  EXPECT_EQ(epsilon_sleeve(cfg("0", {"5"}), 1), cfg("0", {"7"}));
}

TEST(ApproxPlan, EquidistantTarget) {
  BeadConfig a = cfg("0", {"1/2", "3/2", "5/2"});
  BeadConfig b = cfg("0", {"1", "2", "3"});
  PlanResult r = approx_plan(a, b, q("1/8"));
  EXPECT_TRUE(verify_plan(a, r.plan, cfg("0", {"5/4", "5/2", "4"})).ok);

  PlanResult self = approx_plan(b, b, q("1/8"));
  EXPECT_EQ(self.plan.size(), 3u);  // every bead must move right
  Rational worst;
  BeadConfig s = epsilon_sleeve(b, q("1/8"));
  for (std::size_t k = 1; k <= 3; ++k) worst = std::max(worst, s[k] - b[k]);
  EXPECT_EQ(worst, Rational(1));
}

TEST(PredecessorInterval, Examples) {
  PredecessorInterval eq = one_step_predecessor_interval(cfg("0", {"1", "2", "3"}), 2);
  EXPECT_TRUE(eq.empty);
  EXPECT_EQ(eq.lower, Rational(2));
  EXPECT_EQ(eq.upper, Rational(2));

  BeadConfig b = cfg("0", {"1", "3", "6"});
  PredecessorInterval last = one_step_predecessor_interval(b, 3);
  EXPECT_FALSE(last.empty);
  EXPECT_EQ(last.lower, Rational(5));
  EXPECT_EQ(last.upper, Rational(6));

  PredecessorInterval first = one_step_predecessor_interval(b, 1);
  EXPECT_FALSE(first.empty);
  EXPECT_EQ(first.lower, Rational(0));
  EXPECT_EQ(first.upper, Rational(1));

  PredecessorInterval middle = one_step_predecessor_interval(b, 2);
  EXPECT_EQ(middle.lower, Rational(2));
  EXPECT_EQ(middle.upper, Rational(3));

  EXPECT_EQ(kind_of([&] { one_step_predecessor_interval(b, 4); }), ErrorKind::IndexOutOfRange);
}

TEST(HasPredecessor, Examples) {
  EXPECT_FALSE(has_predecessor(cfg("0", {"1", "2", "3"})));
  BeadConfig b = cfg("0", {"1", "3", "5", "7"});
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(one_step_predecessor_interval(b, k).empty) << k;
  EXPECT_FALSE(has_predecessor(b));
  EXPECT_TRUE(has_predecessor(cfg("0", {"1", "3", "6"})));
}

TEST(ConverseCounterexample, Examples) {
  BeadConfig b = cfg("0", {"1", "3", "5", "7"});
  BeadConfig c = converse_counterexample(b);
  EXPECT_EQ(c, cfg("0", {"1", "2", "4", "6"}));
  EXPECT_EQ(gaps(c), GapVector::make(0, qs({"1", "1", "2", "2"})));
  EXPECT_TRUE(leq(c, b));
  EXPECT_NE(c, b);

  EXPECT_EQ(converse_counterexample(cfg("0", {"1", "3", "6", "9", "12"})), cfg("0", {"1", "3", "5", "8", "11"}));
  EXPECT_EQ(kind_of([] { converse_counterexample(cfg("0", {"1", "3", "6", "10"})); }), ErrorKind::PatternMismatch);
  EXPECT_EQ(kind_of([] { converse_counterexample(cfg("0", {"1", "2", "3"})); }), ErrorKind::PatternMismatch);
}

TEST(PlannerProperties, ContractionLaw) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t m = 2 + rng() % 7;
    auto [a, b] = random_pair(m, rng(), false);
    auto [moves, y] = sweep_T(b);
    Rational factor = Rational(1) - Rational::pow2(1 - static_cast<long>(m));
    ASSERT_LE(lambda(y), factor * lambda(b));
    ASSERT_EQ(y[m], b[m]);
    for (const auto& mv : moves) ASSERT_GT(mv.delta.sign(), 0);
  }
}

TEST(PlannerProperties, LowerBoundOnSpread) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t m = 2 + rng() % 7;
    auto [a, b] = random_pair(m, rng(), false);
    // pin the last bead: slide it up to B_m
    BeadConfig pinned = apply_slide(a, {m, b[m] - a[m]});
    ASSERT_GE(lambda(pinned) * Rational(static_cast<long>(m - 1)), lambda(b));
  }
}

TEST(PlannerProperties, PlansVerifyAndRespectBounds) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::size_t n = 1 + seed % 7;
    auto [a, b] = random_pair(n, seed * 7919 + 1, true);
    PlanResult r = plan(a, b);
    ASSERT_TRUE(verify_plan(a, r.plan, b).ok) << seed;
    for (const auto& level : r.levels) ASSERT_LE(level.sweeps_used, level.sweep_bound) << seed;
    for (const auto& m : r.plan.moves) ASSERT_GT(m.delta.sign(), 0);
  }
}

}  // namespace
}  // namespace beads
