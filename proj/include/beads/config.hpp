#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beads/error.hpp"
#include "beads/rational.hpp"

namespace beads {

namespace detail {

// Index k of the first gap pair with gaps[k] > gaps[k+1] (0-based), or -1
// when gaps[0] < 0. nullopt when the gaps are nonnegative and nondecreasing.
inline std::optional<std::ptrdiff_t> gap_violation(std::span<const Rational> gaps) {
  if (!gaps.empty() && gaps.front().sign() < 0) return -1;
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k)
    if (gaps[k] > gaps[k + 1]) return static_cast<std::ptrdiff_t>(k);
  return std::nullopt;
}

inline std::string describe_violation(std::span<const Rational> gaps, std::ptrdiff_t at) {
  if (at < 0) return "a_1 = " + gaps.front().str() + " < 0";
  auto k = static_cast<std::size_t>(at);
  return "a_" + std::to_string(k + 1) + " = " + gaps[k].str() + " > a_" + std::to_string(k + 2) +
         " = " + gaps[k + 1].str();
}

inline std::vector<Rational> differences(const Rational& mu, std::span<const Rational> positions) {
  std::vector<Rational> gaps;
  gaps.reserve(positions.size());
  const Rational* prev = &mu;
  for (const auto& p : positions) {
    gaps.push_back(p - *prev);
    prev = &p;
  }
  return gaps;
}

}  // namespace detail

struct SlideMove {
  std::size_t bead = 1;  // 1-based
  Rational delta;

  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

struct SlidePlan {
  std::vector<SlideMove> moves;

  std::size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
  friend bool operator==(const SlidePlan&, const SlidePlan&) = default;
};

class GapVector {
 public:
  static GapVector make(Rational mu, std::vector<Rational> gaps) {
    if (gaps.empty()) throw Error(ErrorKind::EmptyConfig, "gap vector must have at least one entry");
    if (auto at = detail::gap_violation(gaps))
      throw Error(ErrorKind::NotMonotone, detail::describe_violation(gaps, *at));
    return GapVector(std::move(mu), std::move(gaps));
  }

  const Rational& mu() const noexcept { return mu_; }
  std::size_t size() const noexcept { return gaps_.size(); }
  std::span<const Rational> values() const noexcept { return gaps_; }
  // 1-based, matching bead numbering.
  const Rational& operator[](std::size_t k) const { return gaps_.at(k - 1); }

  friend bool operator==(const GapVector&, const GapVector&) = default;

 private:
  GapVector(Rational mu, std::vector<Rational> gaps) : mu_(std::move(mu)), gaps_(std::move(gaps)) {}

  Rational mu_;
  std::vector<Rational> gaps_;
};

// A monotone bead distribution on [mu, inf): gaps a_1 <= a_2 <= ... <= a_n with
// a_1 = A_1 - mu >= 0. Equal gaps and a_1 = 0 are admitted (closed set).
class BeadConfig {
 public:
  static BeadConfig make(Rational mu, std::vector<Rational> positions) {
    if (positions.empty()) throw Error(ErrorKind::EmptyConfig, "configuration needs at least one bead");
    auto gaps = detail::differences(mu, positions);
    if (auto at = detail::gap_violation(gaps))
      throw Error(ErrorKind::NotMonotone, detail::describe_violation(gaps, *at));
    return BeadConfig(std::move(mu), std::move(positions));
  }

  const Rational& mu() const noexcept { return mu_; }
  std::size_t size() const noexcept { return positions_.size(); }
  std::span<const Rational> positions() const noexcept { return positions_; }

  // 1-based with the sentinel at(0) == mu.
  const Rational& at(std::size_t k) const { return k == 0 ? mu_ : positions_.at(k - 1); }
  const Rational& operator[](std::size_t k) const { return at(k); }

  Rational gap(std::size_t k) const { return at(k) - at(k - 1); }

  friend bool operator==(const BeadConfig&, const BeadConfig&) = default;

 private:
  friend BeadConfig apply_slide(const BeadConfig&, const SlideMove&);

  BeadConfig(Rational mu, std::vector<Rational> positions)
      : mu_(std::move(mu)), positions_(std::move(positions)) {}

  Rational mu_;
  std::vector<Rational> positions_;
};

inline BeadConfig new_config(Rational mu, std::vector<Rational> positions) {
  return BeadConfig::make(std::move(mu), std::move(positions));
}

inline GapVector gaps(const BeadConfig& config) {
  return GapVector::make(config.mu(), detail::differences(config.mu(), config.positions()));
}

inline BeadConfig from_gaps(const GapVector& g) {
  std::vector<Rational> positions;
  positions.reserve(g.size());
  Rational acc = g.mu();
  for (const auto& a : g.values()) {
    acc += a;
    positions.push_back(acc);
  }
  return BeadConfig::make(g.mu(), std::move(positions));
}

inline void require_comparable(const BeadConfig& a, const BeadConfig& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.size()) + " beads vs " + std::to_string(b.size()));
  if (a.mu() != b.mu())
    throw Error(ErrorKind::BasePointMismatch, a.mu().str() + " vs " + b.mu().str());
}

// Componentwise order A_k <= B_k.
inline bool leq(const BeadConfig& a, const BeadConfig& b) {
  require_comparable(a, b);
  for (std::size_t k = 1; k <= a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// Spread a_n - a_1; zero exactly for equidistant configurations.
inline Rational lambda(const BeadConfig& config) {
  return config.gap(config.size()) - config.gap(1);
}

// b_k > b_{k-2} for every 3 <= k <= n: no four consecutive points of
// (mu, B_1, ..., B_n) are equidistant. Such targets are reachable by slides
// from every A <= B.
inline bool is_slideable_target(const BeadConfig& b) {
  for (std::size_t k = 3; k <= b.size(); ++k)
    if (!(b.gap(k) > b.gap(k - 2))) return false;
  return true;
}

// X + delta * e_k. Admissible iff the result is monotone; for k < n this is
// 2 delta <= a_{k+1} - a_k, the last bead slides freely.
inline BeadConfig apply_slide(const BeadConfig& x, const SlideMove& m) {
  const std::size_t n = x.size();
  if (m.bead < 1 || m.bead > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "bead " + std::to_string(m.bead) + " not in 1.." + std::to_string(n));
  if (m.delta.sign() < 0)
    throw Error(ErrorKind::InadmissibleSlide, "negative delta " + m.delta.str());
  const std::size_t k = m.bead;
  if (k < n) {
    Rational room = x.gap(k + 1) - x.gap(k);
    if (Rational(2) * m.delta > room)
      throw Error(ErrorKind::InadmissibleSlide,
                  "bead " + std::to_string(k) + ": 2*delta = " + (Rational(2) * m.delta).str() +
                      " exceeds a_" + std::to_string(k + 1) + " - a_" + std::to_string(k) + " = " +
                      room.str());
  }
  BeadConfig out = x;
  out.positions_[k - 1] += m.delta;
  return out;
}

// Gap-coordinate form: (.., a_k + delta, a_{k+1} - delta, ..).
inline GapVector apply_slide_gaps(const GapVector& g, const SlideMove& m) {
  const std::size_t n = g.size();
  if (m.bead < 1 || m.bead > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "bead " + std::to_string(m.bead) + " not in 1.." + std::to_string(n));
  if (m.delta.sign() < 0)
    throw Error(ErrorKind::InadmissibleSlide, "negative delta " + m.delta.str());
  const std::size_t k = m.bead;
  std::vector<Rational> out(g.values().begin(), g.values().end());
  if (k < n) {
    Rational room = out[k] - out[k - 1];
    if (Rational(2) * m.delta > room)
      throw Error(ErrorKind::InadmissibleSlide,
                  "bead " + std::to_string(k) + ": 2*delta = " + (Rational(2) * m.delta).str() +
                      " exceeds a_" + std::to_string(k + 1) + " - a_" + std::to_string(k) + " = " +
                      room.str());
    out[k] -= m.delta;
  }
  out[k - 1] += m.delta;
  return GapVector::make(g.mu(), std::move(out));
}

}  // namespace beads
