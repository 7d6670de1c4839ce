#include <gtest/gtest.h>

#include <random>

#include "beads/beads.hpp"
#include "test_helpers.hpp"

namespace beads {
namespace {

using testing::cfg;
using testing::q;
using testing::qs;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(q("3/1"), Rational(3));
  EXPECT_EQ(q("3"), Rational(3));
  EXPECT_EQ(q("-7/2").str(), "-7/2");
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0).str(), "0/1");
}

TEST(Rational, RejectsNonCanonicalWithDistinctError) {
  for (const char* s : {"2/4", "0/2", "-0", "3/3"}) {
    try {
      (void)q(s);
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonCanonicalRational) << s;
    }
  }
  for (const char* s : {"", "1/", "/2", "1/-2", "+1", "01", "1/0", "a", "1.5"}) {
    try {
      (void)q(s);
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedRational) << s;
    }
  }
}

TEST(Rational, ParsesDecimals) {
  EXPECT_EQ(Rational::parse_real("1.25"), Rational(5, 4));
  EXPECT_EQ(Rational::parse_real("-0.5"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse_real("7/3"), Rational(7, 3));
  EXPECT_THROW((void)Rational::parse_real("1."), Error);
}

TEST(Rational, Pow2AndDoubles) {
  EXPECT_EQ(Rational::pow2(3), Rational(8));
  EXPECT_EQ(Rational::pow2(-2), Rational(1, 4));
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
}

TEST(NewConfig, AcceptsMonotone) {
  BeadConfig c = new_config(0, qs({"1", "3", "6"}));
  EXPECT_EQ(gaps(c).values()[2], Rational(3));
}

TEST(NewConfig, RejectsDecreasingGaps) {
  try {
    (void)new_config(0, qs({"2", "3"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonotone);
    EXPECT_NE(e.detail().find("a_1"), std::string::npos);
  }
  EXPECT_THROW((void)new_config(1, qs({"0"})), Error);  // a_1 < 0
  EXPECT_THROW((void)new_config(0, {}), Error);
}

TEST(NewConfig, AdmitsZeroFirstGap) {
  BeadConfig c = new_config(1, qs({"1", "2", "3"}));
  EXPECT_EQ(gaps(c), GapVector::make(1, qs({"0", "1", "1"})));
}

TEST(Gaps, Examples) {
  EXPECT_EQ(gaps(cfg("0", {"1", "3", "6"})), GapVector::make(0, qs({"1", "2", "3"})));
  EXPECT_EQ(gaps(cfg("-1", {"0", "1"})), GapVector::make(-1, qs({"1", "1"})));
  EXPECT_EQ(from_gaps(GapVector::make(0, qs({"1", "2", "3"}))), cfg("0", {"1", "3", "6"}));
}

TEST(FromGaps, Examples) {
  EXPECT_EQ(from_gaps(GapVector::make(0, qs({"1", "1", "1"}))), cfg("0", {"1", "2", "3"}));
  EXPECT_EQ(from_gaps(GapVector::make(2, qs({"0", "3"}))), cfg("2", {"2", "5"}));
  EXPECT_THROW((void)GapVector::make(0, qs({"2", "1"})), Error);
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(cfg("0", {"1", "2", "3"}), cfg("0", {"1", "3", "6"})));
  EXPECT_TRUE(leq(cfg("0", {"1", "3", "6"}), cfg("0", {"1", "3", "6"})));
  EXPECT_FALSE(leq(cfg("0", {"1", "4", "7"}), cfg("0", {"1", "3", "6"})));
}

TEST(Leq, MismatchErrors) {
  try {
    (void)leq(cfg("0", {"1"}), cfg("0", {"1", "2"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  try {
    (void)leq(cfg("0", {"1"}), cfg("1", {"2"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BasePointMismatch);
  }
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda(cfg("0", {"1", "2", "3"})), Rational(0));
  EXPECT_EQ(lambda(cfg("0", {"1", "3", "6"})), Rational(2));
  EXPECT_EQ(lambda(cfg("0", {"5"})), Rational(0));
}

TEST(Slideable, Examples) {
  EXPECT_TRUE(is_slideable_target(cfg("0", {"1", "3", "6"})));
  EXPECT_FALSE(is_slideable_target(cfg("0", {"1", "2", "3"})));
  EXPECT_FALSE(is_slideable_target(cfg("0", {"1", "3", "5", "7"})));
  EXPECT_TRUE(is_slideable_target(cfg("0", {"1", "2"})));
}

TEST(ApplySlide, Examples) {
  BeadConfig x = cfg("0", {"1", "3", "6"});
  EXPECT_EQ(apply_slide(x, {3, 10}), cfg("0", {"1", "3", "16"}));
  try {
    (void)apply_slide(x, {2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InadmissibleSlide);
  }
  BeadConfig y = apply_slide(x, {2, q("1/2")});
  EXPECT_EQ(y, cfg("0", {"1", "7/2", "6"}));
  EXPECT_EQ(gaps(y), GapVector::make(0, qs({"1", "5/2", "5/2"})));
  EXPECT_EQ(apply_slide(x, {1, 0}), x);
  EXPECT_THROW((void)apply_slide(x, {4, 1}), Error);
  EXPECT_THROW((void)apply_slide(x, {1, -1}), Error);
}

TEST(ApplySlideGaps, Examples) {
  GapVector g = GapVector::make(0, qs({"1", "2", "3"}));
  EXPECT_EQ(apply_slide_gaps(g, {2, q("1/2")}), GapVector::make(0, qs({"1", "5/2", "5/2"})));
  EXPECT_EQ(apply_slide_gaps(g, {3, 4}), GapVector::make(0, qs({"1", "2", "7"})));
  try {
    (void)apply_slide_gaps(GapVector::make(0, qs({"1", "1"})), {1, q("1/4")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InadmissibleSlide);
  }
}

// Random monotone configuration with small dyadic gaps.
BeadConfig random_config(std::mt19937_64& rng, std::size_t n, long mu) {
  std::vector<Rational> g;
  Rational acc(static_cast<long>(rng() % 9), 4L);
  for (std::size_t k = 0; k < n; ++k) {
    g.push_back(acc);
    acc += Rational(static_cast<long>(rng() % 5), 4L);
  }
  return from_gaps(GapVector::make(mu, std::move(g)));
}

TEST(ConfigProperties, RoundTripAndCommutation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 7;
    BeadConfig x = random_config(rng, n, static_cast<long>(rng() % 7) - 3);
    ASSERT_EQ(from_gaps(gaps(x)), x);
    ASSERT_EQ(gaps(from_gaps(gaps(x))), gaps(x));

    std::size_t k = 1 + rng() % n;
    Rational room = k < n ? x.gap(k + 1) - x.gap(k) : Rational(5);
    Rational delta = room * Rational(static_cast<long>(rng() % 5), 8L);  // 2 delta <= room
    SlideMove m{k, delta};
    BeadConfig y = apply_slide(x, m);
    for (std::size_t i = 1; i <= n; ++i) ASSERT_EQ(y[i], i == k ? x[i] + delta : x[i]);
    ASSERT_EQ(gaps(y), apply_slide_gaps(gaps(x), m));

    ASSERT_TRUE(lambda(x).sign() >= 0);
    bool all_equal = true;
    for (std::size_t i = 2; i <= n; ++i) all_equal = all_equal && x.gap(i) == x.gap(1);
    ASSERT_EQ(lambda(x).is_zero(), all_equal);
  }
}

TEST(ConfigProperties, LeqIsPartialOrder) {
  std::mt19937_64 rng(5);
  std::vector<BeadConfig> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(random_config(rng, 3, 0));
  for (const auto& a : sample) {
    ASSERT_TRUE(leq(a, a));
    for (const auto& b : sample) {
      if (leq(a, b) && leq(b, a)) {
        ASSERT_EQ(a, b);
      }
      for (const auto& c : sample) {
        if (leq(a, b) && leq(b, c)) {
          ASSERT_TRUE(leq(a, c));
        }
      }
    }
  }
}

TEST(ConfigProperties, SlideabilityInvariantUnderTranslationAndScaling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    BeadConfig b = random_config(rng, 1 + rng() % 6, 0);
    Rational shift(static_cast<long>(rng() % 11) - 5, 3L);
    Rational scale(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
    std::vector<Rational> moved;
    for (auto p : b.positions()) moved.push_back(shift + scale * p);
    BeadConfig c = BeadConfig::make(shift, std::move(moved));
    ASSERT_EQ(is_slideable_target(b), is_slideable_target(c));
  }
}

}  // namespace
}  // namespace beads
