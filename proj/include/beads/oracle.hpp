#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/rational.hpp"

namespace beads {

struct LatticeSpec {
  long denominator = 1;
  std::size_t max_states = 1'000'000;
};

struct ReachabilityVerdict {
  bool reachable = false;
  std::size_t states_explored = 0;
  std::optional<SlidePlan> witness;
};

namespace detail {

using LatticePoint = std::vector<std::int64_t>;

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::int64_t scale_to_lattice(const Rational& r, long d) {
  Rational scaled = r * Rational(d);
  if (scaled.denominator() != 1 || !scaled.numerator().fits_slong_p())
    throw Error(ErrorKind::OffLattice, r.str() + " is not a multiple of 1/" + std::to_string(d));
  return scaled.numerator().get_si();
}

inline void require_denominator(const LatticeSpec& spec) {
  if (spec.denominator <= 0) throw Error(ErrorKind::OffLattice, "lattice denominator must be positive");
}

// floor(v / 2) for signed v
inline std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace detail

// Breadth-first search over the 1/d lattice restricted to X <= B. Beads are
// expanded in increasing k, targets in increasing position.
inline ReachabilityVerdict lattice_reachable(const BeadConfig& a, const BeadConfig& b, const LatticeSpec& spec) {
  if (!leq(a, b)) throw Error(ErrorKind::PreconditionOrder, "source is not <= target");
  detail::require_denominator(spec);
  const long d = spec.denominator;
  const std::size_t n = a.size();
  const std::int64_t mu = detail::scale_to_lattice(a.mu(), d);
  detail::LatticePoint start(n), goal(n);
  for (std::size_t k = 0; k < n; ++k) {
    start[k] = detail::scale_to_lattice(a.positions()[k], d);
    goal[k] = detail::scale_to_lattice(b.positions()[k], d);
  }

  struct Node {
    detail::LatticePoint state;
    std::size_t parent;
    std::size_t bead;
    std::int64_t step;
  };
  std::vector<Node> nodes;
  std::unordered_map<detail::LatticePoint, std::size_t, detail::LatticePointHash> seen;
  nodes.push_back({start, 0, 0, 0});
  seen.emplace(start, 0);

  auto witness_to = [&](std::size_t idx) {
    std::vector<SlideMove> rev;
    while (idx != 0) {
      rev.push_back({nodes[idx].bead, Rational(static_cast<long>(nodes[idx].step), d)});
      idx = nodes[idx].parent;
    }
    return SlidePlan{{rev.rbegin(), rev.rend()}};
  };

  if (start == goal) return {true, 1, SlidePlan{}};

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t k = 0; k < n; ++k) {
      const detail::LatticePoint& x = nodes[head].state;
      std::int64_t upper = goal[k];
      if (k + 1 < n) {
        const std::int64_t left = k == 0 ? mu : x[k - 1];
        upper = std::min(upper, detail::floor_half(left + x[k + 1]));
      }
      for (std::int64_t p = x[k] + 1; p <= upper; ++p) {
        detail::LatticePoint next = nodes[head].state;
        next[k] = p;
        if (seen.contains(next)) continue;
        if (nodes.size() >= spec.max_states)
          throw Error(ErrorKind::BudgetExceeded, "explored " + std::to_string(nodes.size()) + " states");
        const std::int64_t step = p - nodes[head].state[k];
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), head, k + 1, step});
        if (nodes.back().state == goal) return {true, nodes.size(), witness_to(nodes.size() - 1)};
      }
    }
  }
  return {false, nodes.size(), std::nullopt};
}

// Every lattice configuration X != B with B = X + delta e_k admissible,
// found by brute force over the positions of each bead.
inline std::vector<BeadConfig> enumerate_one_step_predecessors(const BeadConfig& b, const LatticeSpec& spec) {
  detail::require_denominator(spec);
  const long d = spec.denominator;
  const std::size_t n = b.size();
  const std::int64_t mu = detail::scale_to_lattice(b.mu(), d);
  detail::LatticePoint pts(n);
  for (std::size_t k = 0; k < n; ++k) pts[k] = detail::scale_to_lattice(b.positions()[k], d);

  auto monotone = [&](const detail::LatticePoint& x) {
    std::int64_t prev_pos = mu, prev_gap = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t g = x[k] - prev_pos;
      if (g < prev_gap) return false;
      prev_gap = g;
      prev_pos = x[k];
    }
    return true;
  };

  std::vector<BeadConfig> out;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t floor_pos = k == 0 ? mu : pts[k - 1];
    for (std::int64_t p = floor_pos; p < pts[k]; ++p) {
      detail::LatticePoint x = pts;
      x[k] = p;
      if (!monotone(x)) continue;
      std::vector<Rational> positions;
      positions.reserve(n);
      for (auto v : x) positions.emplace_back(static_cast<long>(v), d);
      out.push_back(BeadConfig::make(b.mu(), std::move(positions)));
    }
  }
  return out;
}

// All monotone configurations with positions in {mu + j/d} and A_n <= max_position.
inline std::vector<BeadConfig> enumerate_lattice_configs(std::size_t n, const Rational& mu, long d,
                                                         const Rational& max_position) {
  if (n == 0) throw Error(ErrorKind::EmptyConfig, "n must be positive");
  const std::int64_t base = detail::scale_to_lattice(mu, d);
  const std::int64_t top = detail::scale_to_lattice(max_position, d);
  std::vector<BeadConfig> out;
  std::vector<std::int64_t> pos;
  auto rec = [&](auto&& self, std::int64_t prev, std::int64_t min_gap) -> void {
    if (pos.size() == n) {
      std::vector<Rational> positions;
      for (auto v : pos) positions.emplace_back(static_cast<long>(v), d);
      out.push_back(BeadConfig::make(mu, std::move(positions)));
      return;
    }
    for (std::int64_t g = min_gap; prev + g <= top; ++g) {
      pos.push_back(prev + g);
      self(self, prev + g, g);
      pos.pop_back();
    }
  };
  rec(rec, base, 0);
  return out;
}

// Deterministic random pair A <= B.
//
// Distribution (all draws are rng() % span over std::mt19937_64(seed)):
//   mu in {-4..4}; b_1 = j/4 with j in {0..8}; each increment b_k - b_{k-1}
//   is j/4 with j in {1..8} when slideable_only, otherwise 0 with
//   probability 1/2 and j/4 (j in {1..8}) otherwise. A starts from gaps drawn
//   the same way with increments in {0..8}/4, is scaled about mu by the
//   largest s <= 1 keeping A <= B, then by r = 1 (probability 1/2) or
//   r = j/8 with j in {1..7}.
inline std::pair<BeadConfig, BeadConfig> random_pair(std::size_t n, std::uint64_t seed, bool slideable_only) {
  if (n == 0) throw Error(ErrorKind::EmptyConfig, "n must be positive");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const Rational mu(static_cast<long>(draw(-4, 4)));

  std::vector<Rational> b_gaps;
  b_gaps.emplace_back(static_cast<long>(draw(0, 8)), 4L);
  for (std::size_t k = 1; k < n; ++k) {
    long inc = 0;
    if (slideable_only || draw(0, 1) == 1) inc = static_cast<long>(draw(1, 8));
    b_gaps.push_back(b_gaps.back() + Rational(inc, 4));
  }
  BeadConfig b = from_gaps(GapVector::make(mu, std::move(b_gaps)));

  std::vector<Rational> a_gaps;
  a_gaps.emplace_back(static_cast<long>(draw(0, 8)), 4L);
  for (std::size_t k = 1; k < n; ++k) a_gaps.push_back(a_gaps.back() + Rational(static_cast<long>(draw(0, 8)), 4L));
  BeadConfig raw = from_gaps(GapVector::make(mu, std::move(a_gaps)));

  Rational s(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational offset = raw[k] - mu;
    if (offset.sign() > 0) {
      Rational bound = (b[k] - mu) / offset;
      if (bound < s) s = bound;
    }
  }
  Rational r(1);
  if (draw(0, 1) == 0) r = Rational(static_cast<long>(draw(1, 7)), 8L);
  std::vector<Rational> a_pos;
  for (std::size_t k = 1; k <= n; ++k) a_pos.push_back(mu + r * s * (raw[k] - mu));
  return {BeadConfig::make(mu, std::move(a_pos)), std::move(b)};
}

}  // namespace beads
