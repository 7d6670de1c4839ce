#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/rational.hpp"

namespace beads {

// Relative tolerance for floating-point verdicts: a <= b holds when
// a <= b + kTolerance * (1 + |b|).
inline constexpr double kTolerance = 1e-9;

enum class Curvature { Concave, Convex, Linear, Unknown };
enum class EvalMode { Exact, Float };

constexpr std::string_view to_string(EvalMode m) { return m == EvalMode::Exact ? "exact" : "float"; }

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline bool approx_leq(double lhs, double rhs) { return lhs <= rhs + kTolerance * (1.0 + std::abs(rhs)); }

// Continuous piecewise-linear function through (x_0, y_0) < ... < (x_p, y_p),
// extended linearly beyond both ends.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() < 2 || xs_.size() != ys_.size())
      throw Error(ErrorKind::MalformedInput, "piecewise-linear function needs at least two points");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
      if (!(xs_[i] < xs_[i + 1])) throw Error(ErrorKind::MalformedInput, "breakpoints must strictly increase");
      slopes_.push_back((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]));
    }
  }

  std::span<const Rational> breakpoints() const { return xs_; }
  std::span<const Rational> values() const { return ys_; }
  std::span<const Rational> slopes() const { return slopes_; }

  Rational operator()(const Rational& t) const {
    std::size_t seg = segment_of(t);
    return ys_[seg] + slopes_[seg] * (t - xs_[seg]);
  }

  // Slope of the piece containing t, taking the right piece at breakpoints.
  const Rational& right_slope(const Rational& t) const { return slopes_[segment_of(t)]; }

  bool concave() const { return std::is_sorted(slopes_.rbegin(), slopes_.rend()); }
  bool convex() const { return std::is_sorted(slopes_.begin(), slopes_.end()); }

  // Every piece meeting [lo, hi] has slope >= 0.
  bool nondecreasing_on(const Rational& lo, const Rational& hi) const {
    for (std::size_t s = segment_of(lo), last = segment_of(hi); s <= last; ++s)
      if (slopes_[s].sign() < 0) return false;
    return true;
  }

 private:
  std::size_t segment_of(const Rational& t) const {
    // pieces: [-inf, x_1), [x_1, x_2), ..., [x_{p-1}, +inf)
    auto it = std::upper_bound(xs_.begin() + 1, xs_.end() - 1, t);
    return static_cast<std::size_t>(it - xs_.begin()) - 1;
  }

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  std::vector<Rational> slopes_;
};

struct SmoothFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;  // may be empty
  Curvature curvature = Curvature::Unknown;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
};

class TestFunction {
 public:
  static TestFunction piecewise_linear(std::vector<Rational> xs, std::vector<Rational> ys, std::string name = "pwl") {
    return TestFunction(std::move(name), PiecewiseLinear(std::move(xs), std::move(ys)));
  }
  static TestFunction smooth(SmoothFunction f) {
    std::string name = f.name;
    return TestFunction(std::move(name), std::move(f));
  }

  const std::string& name() const { return name_; }
  bool exact() const { return std::holds_alternative<PiecewiseLinear>(impl_); }
  const PiecewiseLinear& pwl() const { return std::get<PiecewiseLinear>(impl_); }
  const SmoothFunction& smooth_impl() const { return std::get<SmoothFunction>(impl_); }

  Curvature curvature() const {
    if (exact()) {
      const auto& p = pwl();
      if (p.concave() && p.convex()) return Curvature::Linear;
      if (p.concave()) return Curvature::Concave;
      if (p.convex()) return Curvature::Convex;
      return Curvature::Unknown;
    }
    return smooth_impl().curvature;
  }

  Rational exact_value(const Rational& t) const { return pwl()(t); }

  double operator()(double t) const {
    if (exact()) return pwl()(Rational::from_double(t)).to_double();
    const auto& f = smooth_impl();
    if (t < f.domain_lo || t > f.domain_hi)
      throw Error(ErrorKind::DomainError, f.name + " is undefined at " + format_double(t));
    double v = f.value(t);
    if (!std::isfinite(v)) throw Error(ErrorKind::DomainError, f.name + " is not finite at " + format_double(t));
    return v;
  }

  bool has_derivative() const { return exact() || static_cast<bool>(smooth_impl().derivative); }

  double derivative(double t) const {
    if (exact()) return pwl().right_slope(Rational::from_double(t)).to_double();
    const auto& f = smooth_impl();
    if (!f.derivative) throw Error(ErrorKind::DerivativeUnavailable, f.name + " has no derivative");
    double v = f.derivative(t);
    if (!std::isfinite(v)) throw Error(ErrorKind::DerivativeUnavailable, f.name + "' is not finite at " + format_double(t));
    return v;
  }

 private:
  TestFunction(std::string name, std::variant<PiecewiseLinear, SmoothFunction> impl)
      : name_(std::move(name)), impl_(std::move(impl)) {}

  std::string name_;
  std::variant<PiecewiseLinear, SmoothFunction> impl_;
};

// Built-in catalog: sqrt, log1p, square, exp, and "pwl:x0,y0;x1,y1;...".
inline TestFunction lookup_function(std::string_view name) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (name == "sqrt")
    return TestFunction::smooth({"sqrt", [](double t) { return std::sqrt(t); },
                                 [](double t) { return 0.5 / std::sqrt(t); }, Curvature::Concave, 0.0, inf});
  if (name == "log1p")
    return TestFunction::smooth({"log1p", [](double t) { return std::log1p(t); },
                                 [](double t) { return 1.0 / (1.0 + t); }, Curvature::Concave, -1.0, inf});
  if (name == "square")
    return TestFunction::smooth({"square", [](double t) { return t * t; }, [](double t) { return 2.0 * t; },
                                 Curvature::Convex});
  if (name == "exp")
    return TestFunction::smooth({"exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
                                 Curvature::Convex});
  if (name.starts_with("pwl:")) {
    std::vector<Rational> xs, ys;
    std::string_view rest = name.substr(4);
    while (!rest.empty()) {
      auto semi = rest.find(';');
      std::string_view point = rest.substr(0, semi);
      auto comma = point.find(',');
      if (comma == std::string_view::npos)
        throw Error(ErrorKind::UnknownFunction, "pwl point '" + std::string(point) + "' needs x,y");
      xs.push_back(Rational::parse_real(point.substr(0, comma)));
      ys.push_back(Rational::parse_real(point.substr(comma + 1)));
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    }
    return TestFunction::piecewise_linear(std::move(xs), std::move(ys), std::string(name));
  }
  throw Error(ErrorKind::UnknownFunction, "unknown function '" + std::string(name) + "'");
}

// t -> -g(-t). Concave exactly when g is convex.
inline TestFunction reflect_negate(const TestFunction& g) {
  if (g.exact()) {
    const auto& p = g.pwl();
    std::vector<Rational> xs, ys;
    for (std::size_t i = p.breakpoints().size(); i-- > 0;) {
      xs.push_back(-p.breakpoints()[i]);
      ys.push_back(-p.values()[i]);
    }
    return TestFunction::piecewise_linear(std::move(xs), std::move(ys), "-" + g.name() + "(-t)");
  }
  const SmoothFunction& s = g.smooth_impl();
  SmoothFunction f;
  f.name = "-" + s.name + "(-t)";
  f.value = [v = s.value](double t) { return -v(-t); };
  if (s.derivative) f.derivative = [d = s.derivative](double t) { return d(-t); };
  f.curvature = s.curvature == Curvature::Convex    ? Curvature::Concave
                : s.curvature == Curvature::Concave ? Curvature::Convex
                                                    : s.curvature;
  f.domain_lo = -s.domain_hi;
  f.domain_hi = -s.domain_lo;
  return TestFunction::smooth(std::move(f));
}

// max |(f(t+h) - f(t-h)) / 2h - f'(t)| <= tol over an evenly spaced grid.
inline bool derivative_consistent(const TestFunction& f, double lo, double hi, int points = 64, double h = 1e-5,
                                  double tol = 1e-4) {
  for (int i = 0; i < points; ++i) {
    double t = lo + (hi - lo) * i / std::max(1, points - 1);
    double fd = (f(t + h) - f(t - h)) / (2 * h);
    if (std::abs(fd - f.derivative(t)) > tol) return false;
  }
  return true;
}

// g(t) = f(t) - f'(L) t for t <= L, constant f(L) - f'(L) L above.
// Nondecreasing and concave whenever f is concave.
inline TestFunction concave_clamp(const TestFunction& f, double L) {
  if (f.exact()) {
    const auto& p = f.pwl();
    const Rational cut = Rational::from_double(L);
    const Rational slope = p.right_slope(cut);
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i < p.breakpoints().size() && p.breakpoints()[i] < cut; ++i) {
      xs.push_back(p.breakpoints()[i]);
      ys.push_back(p.values()[i] - slope * p.breakpoints()[i]);
    }
    const Rational top = p(cut) - slope * cut;
    if (xs.empty()) {
      // cut lies left of every breakpoint: the leftmost piece has this slope
      xs.push_back(cut - Rational(1));
      ys.push_back(top);
    }
    xs.push_back(cut);
    ys.push_back(top);
    xs.push_back(cut + Rational(1));
    ys.push_back(top);
    return TestFunction::piecewise_linear(std::move(xs), std::move(ys), "clamp(" + f.name() + ")");
  }
  if (!f.has_derivative()) throw Error(ErrorKind::DerivativeUnavailable, f.name() + " has no derivative");
  const SmoothFunction& s = f.smooth_impl();
  const double slope = f.derivative(L);
  const double top = f(L) - slope * L;
  SmoothFunction g;
  g.name = "clamp(" + s.name + ")";
  g.value = [v = s.value, slope, top, L](double t) { return t <= L ? v(t) - slope * t : top; };
  g.derivative = [d = s.derivative, slope, L](double t) { return t <= L ? d(t) - slope : 0.0; };
  g.curvature = s.curvature == Curvature::Concave || s.curvature == Curvature::Linear ? Curvature::Concave
                                                                                        : Curvature::Unknown;
  g.domain_lo = s.domain_lo;
  g.domain_hi = s.domain_hi;
  return TestFunction::smooth(std::move(g));
}

namespace detail {

inline constexpr int kSamples = 64;

inline std::vector<double> sample_grid(double lo, double hi) {
  std::vector<double> ts;
  if (!(hi > lo)) return {lo};
  for (int i = 0; i < kSamples; ++i) ts.push_back(lo + (hi - lo) * i / (kSamples - 1));
  return ts;
}

inline bool sampled_nondecreasing(const TestFunction& f, double lo, double hi) {
  auto ts = sample_grid(lo, hi);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!approx_leq(f(ts[i]), f(ts[i + 1]))) return false;
  return true;
}

// Second differences on the grid; sign +1 checks concavity, -1 convexity.
inline bool sampled_curvature(const TestFunction& f, double lo, double hi, int sign) {
  auto ts = sample_grid(lo, hi);
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    double mid = 2 * f(ts[i]);
    double ends = f(ts[i - 1]) + f(ts[i + 1]);
    if (sign > 0 ? !approx_leq(ends, mid) : !approx_leq(mid, ends)) return false;
  }
  return true;
}

// Exact for piecewise-linear f, sampled otherwise.
inline void require_nondecreasing(const TestFunction& f, const Rational& lo, const Rational& hi) {
  bool ok = f.exact() ? f.pwl().nondecreasing_on(lo, hi) : sampled_nondecreasing(f, lo.to_double(), hi.to_double());
  if (!ok) throw Error(ErrorKind::NotNondecreasing, f.name() + " decreases on [" + lo.str() + ", " + hi.str() + "]");
}

// Exact check for piecewise-linear f; smooth f must be declared with the
// right curvature and is spot-checked, failures becoming warnings.
inline void require_curvature(const TestFunction& f, bool concave, const Rational& lo, const Rational& hi,
                              std::vector<std::string>& warnings) {
  const ErrorKind kind = concave ? ErrorKind::NotConcave : ErrorKind::NotConvex;
  const char* word = concave ? "concave" : "convex";
  Curvature c = f.curvature();
  if (f.exact()) {
    if (!(concave ? f.pwl().concave() : f.pwl().convex()))
      throw Error(kind, f.name() + " is not " + std::string(word));
    return;
  }
  const Curvature wrong = concave ? Curvature::Convex : Curvature::Concave;
  if (c == wrong) throw Error(kind, f.name() + " is declared " + (concave ? "convex" : "concave"));
  if (c == Curvature::Unknown) warnings.push_back(f.name() + ": curvature not declared, relying on sampling");
  if (!sampled_curvature(f, lo.to_double(), hi.to_double(), concave ? 1 : -1))
    warnings.push_back(f.name() + ": sampling found a " + (concave ? "convex" : "concave") + " stretch on [" +
                       lo.str() + ", " + hi.str() + "]");
}

template <class Range>
Rational exact_sum(const TestFunction& f, const Range& xs) {
  Rational s;
  for (const auto& x : xs) s += f.exact_value(x);
  return s;
}

template <class Range>
double float_sum(const TestFunction& f, const Range& xs) {
  double s = 0;
  for (const auto& x : xs) s += f(x.to_double());
  return s;
}

}  // namespace detail

// Sorted copy; its prefix sums are pointwise <= those of any ordering.
template <class T>
std::vector<T> increasing_rearrangement(std::span<const T> xs) {
  std::vector<T> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

// gaps (a_1..a_n) -> (f(a_1)..f(a_n)) on B_n(0).
inline GapVector transform_gaps(const GapVector& g, const TestFunction& f) {
  if (!g.mu().is_zero()) throw Error(ErrorKind::BasePointNotZero, "transform is defined on base point 0");
  detail::require_nondecreasing(f, g.values().front(), g.values().back());
  std::vector<Rational> out;
  out.reserve(g.size());
  for (const auto& a : g.values()) out.push_back(f.exact() ? f.exact_value(a) : Rational::from_double(f(a.to_double())));
  if (detail::gap_violation(out)) throw Error(ErrorKind::NotNondecreasing, f.name() + " does not preserve gap order");
  return GapVector::make(Rational(0), std::move(out));
}

struct TransformOrderReport {
  bool holds = true;
  std::optional<std::size_t> first_violation;  // 1-based bead index
  EvalMode mode = EvalMode::Exact;
  std::vector<std::string> lhs;  // prefix sums of f(a_i)
  std::vector<std::string> rhs;  // prefix sums of f(b_i)
};

// Does T_f(A) <= T_f(B) hold componentwise?
inline TransformOrderReport check_transform_order(const BeadConfig& a, const BeadConfig& b, const TestFunction& f) {
  if (!leq(a, b)) throw Error(ErrorKind::PreconditionOrder, "A is not <= B");
  if (!a.mu().is_zero()) throw Error(ErrorKind::BasePointNotZero, "transform is defined on base point 0");
  GapVector ga = gaps(a), gb = gaps(b);
  detail::require_nondecreasing(f, std::min(ga.values().front(), gb.values().front()),
                                std::max(ga.values().back(), gb.values().back()));
  TransformOrderReport report;
  report.mode = f.exact() ? EvalMode::Exact : EvalMode::Float;
  Rational ea, eb;
  double fa = 0, fb = 0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    bool ok = false;
    if (f.exact()) {
      ea += f.exact_value(ga[k]);
      eb += f.exact_value(gb[k]);
      ok = ea <= eb;
      report.lhs.push_back(ea.str());
      report.rhs.push_back(eb.str());
    } else {
      fa += f(ga[k].to_double());
      fb += f(gb[k].to_double());
      ok = approx_leq(fa, fb);
      report.lhs.push_back(format_double(fa));
      report.rhs.push_back(format_double(fb));
    }
    if (!ok && report.holds) {
      report.holds = false;
      report.first_violation = k;
    }
  }
  return report;
}

// Two-gap pairs A = (0, [x, x+y]) and B = A + delta e_1 with transformed order
// violated. Piecewise-linear f is probed exactly at every convex kink; all f
// are then sampled with x <= x+delta <= y-delta <= y drawn from [0, 8].
inline std::optional<std::pair<BeadConfig, BeadConfig>> find_concavity_counterexample(const TestFunction& f,
                                                                                       int trials,
                                                                                       std::uint64_t seed) {
  auto pair_for = [](const Rational& x, const Rational& y, const Rational& delta) {
    return std::pair{new_config(0, {x, x + y}), new_config(0, {x + delta, x + y})};
  };
  auto violates = [&](const std::pair<BeadConfig, BeadConfig>& ab) {
    try {
      return !check_transform_order(ab.first, ab.second, f).holds;
    } catch (const Error&) {
      return false;
    }
  };

  if (f.exact()) {
    const auto& p = f.pwl();
    auto xs = p.breakpoints();
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      if (!(p.slopes()[i] > p.slopes()[i - 1]) || xs[i].sign() <= 0) continue;
      Rational h = std::min({xs[i], xs[i] - xs[i - 1], xs[i + 1] - xs[i]});
      auto ab = pair_for(xs[i] - h, xs[i] + h, h);
      if (violates(ab)) return ab;
    }
  }

  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  constexpr double span = 8.0;
  for (int t = 0; t < trials; ++t) {
    double x = unit() * span;
    double y = x + unit() * (span - x);
    double delta = unit() * (y - x) / 2;
    Rational rx = Rational::from_double(x), ry = Rational::from_double(y), rd = Rational::from_double(delta);
    if (Rational(2) * rd > ry - rx) continue;
    auto ab = pair_for(rx, ry, rd);
    if (violates(ab)) return ab;
  }
  return std::nullopt;
}

enum class MajorizationMode { PrefixDominance, EqualTotals };

struct MajorizationInstance {
  std::vector<Rational> x;
  std::vector<Rational> y;
  MajorizationMode mode = MajorizationMode::PrefixDominance;
};

struct InequalityReport {
  bool holds = false;
  std::string lhs;
  std::string rhs;
  EvalMode mode = EvalMode::Exact;
  std::vector<std::string> warnings;
};

namespace detail {

inline void require_same_length(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::DimensionMismatch, std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  if (x.empty()) throw Error(ErrorKind::MalformedInput, "sequences must be nonempty");
}

// sum_{i<=k} lo_i <= sum_{i<=k} hi_i for k = 1..upto
inline void require_prefix_dominance(std::span<const Rational> lo, std::span<const Rational> hi, std::size_t upto) {
  Rational sl, sh;
  for (std::size_t k = 0; k < upto; ++k) {
    sl += lo[k];
    sh += hi[k];
    if (sl > sh)
      throw Error(ErrorKind::PreconditionDominance, "prefix " + std::to_string(k + 1) + ": " + sl.str() + " > " + sh.str());
  }
}

inline void require_totals(std::span<const Rational> x, std::span<const Rational> y) {
  Rational sx, sy;
  for (const auto& v : x) sx += v;
  for (const auto& v : y) sy += v;
  if (sx != sy) throw Error(ErrorKind::PreconditionTotals, "totals differ: " + sx.str() + " vs " + sy.str());
}

inline InequalityReport compare_sums(const TestFunction& f, std::span<const Rational> lo, std::span<const Rational> hi) {
  InequalityReport r;
  if (f.exact()) {
    Rational l = exact_sum(f, lo), h = exact_sum(f, hi);
    r = {l <= h, l.str(), h.str(), EvalMode::Exact, {}};
  } else {
    double l = float_sum(f, lo), h = float_sum(f, hi);
    r = {approx_leq(l, h), format_double(l), format_double(h), EvalMode::Float, {}};
  }
  return r;
}

}  // namespace detail

// f nondecreasing and concave on [mu, inf), y nondecreasing, x_i >= mu and
// prefix sums of x dominated by those of y: sum f(x_i) <= sum f(y_i).
inline InequalityReport check_concave_sum_inequality(const MajorizationInstance& inst, const TestFunction& f,
                                                     const Rational& mu) {
  detail::require_same_length(inst.x, inst.y);
  const std::size_t n = inst.x.size();
  if (!std::is_sorted(inst.y.begin(), inst.y.end()))
    throw Error(ErrorKind::PreconditionSorted, "y must be nondecreasing");
  for (const auto* seq : {&inst.x, &inst.y})
    for (const auto& v : *seq)
      if (v < mu) throw Error(ErrorKind::DomainError, v.str() + " lies below mu = " + mu.str());
  // sums are taken over the increasing rearrangement of x
  auto sorted_x = increasing_rearrangement<Rational>(inst.x);
  detail::require_prefix_dominance(sorted_x, inst.y, n);

  Rational top = std::max(*std::max_element(inst.x.begin(), inst.x.end()), inst.y.back());
  std::vector<std::string> warnings;
  detail::require_nondecreasing(f, mu, top);
  detail::require_curvature(f, true, mu, top, warnings);

  InequalityReport r = detail::compare_sums(f, sorted_x, inst.y);
  r.warnings = std::move(warnings);
  return r;
}

// Concave f, y nondecreasing, prefix dominance for k < n and equal totals:
// sum f(x_i) <= sum f(y_i). Reduced to check_concave_sum_inequality through
// the clamp t -> f(t) - f'(L) t with L above every entry.
inline InequalityReport check_concave_schur(const MajorizationInstance& inst, const TestFunction& f) {
  detail::require_same_length(inst.x, inst.y);
  const std::size_t n = inst.x.size();
  if (!std::is_sorted(inst.y.begin(), inst.y.end()))
    throw Error(ErrorKind::PreconditionSorted, "y must be nondecreasing");
  detail::require_prefix_dominance(inst.x, inst.y, n - 1);
  detail::require_totals(inst.x, inst.y);

  Rational lo = std::min(*std::min_element(inst.x.begin(), inst.x.end()), inst.y.front());
  Rational hi = std::max(*std::max_element(inst.x.begin(), inst.x.end()), inst.y.back());
  std::vector<std::string> warnings;
  detail::require_curvature(f, true, lo, hi, warnings);

  TestFunction fd = f;
  if (!f.has_derivative()) {
    // central difference stands in for the missing derivative
    SmoothFunction s = f.smooth_impl();
    s.derivative = [v = s.value](double t) { return (v(t + 1e-6) - v(t - 1e-6)) / 2e-6; };
    fd = TestFunction::smooth(std::move(s));
    warnings.push_back(f.name() + ": derivative approximated by central differences");
  }
  double cut = std::floor(hi.to_double()) + 1.0;
  if (!f.exact()) cut = std::min(cut, fd.smooth_impl().domain_hi);
  TestFunction g = concave_clamp(fd, cut);

  InequalityReport reduced = check_concave_sum_inequality({inst.x, inst.y, MajorizationMode::PrefixDominance}, g, lo);
  InequalityReport r = detail::compare_sums(f, increasing_rearrangement<Rational>(inst.x), inst.y);
  r.holds = reduced.holds;
  r.warnings = std::move(warnings);
  r.warnings.insert(r.warnings.end(), reduced.warnings.begin(), reduced.warnings.end());
  return r;
}

// Convex g, b nonincreasing, prefix sums of a dominate those of b for k < n,
// equal totals: sum g(a_i) >= sum g(b_i). Reduced to check_concave_schur via
// x = -a, y = -b and f(t) = -g(-t).
inline InequalityReport check_schur_convex(std::span<const Rational> a, std::span<const Rational> b,
                                           const TestFunction& g) {
  detail::require_same_length(a, b);
  const std::size_t n = a.size();
  if (!std::is_sorted(b.begin(), b.end(), std::greater<>()))
    throw Error(ErrorKind::PreconditionSorted, "b must be nonincreasing");
  detail::require_prefix_dominance(b, a, n - 1);
  detail::require_totals(a, b);
  std::vector<std::string> ignored;
  detail::require_curvature(g, false, *std::min_element(a.begin(), a.end()), *std::max_element(a.begin(), a.end()),
                            ignored);

  MajorizationInstance neg{{}, {}, MajorizationMode::EqualTotals};
  for (const auto& v : a) neg.x.push_back(-v);
  for (const auto& v : b) neg.y.push_back(-v);
  InequalityReport reduced = check_concave_schur(neg, reflect_negate(g));

  InequalityReport r = detail::compare_sums(g, b, a);  // rhs-first: sum g(b) <= sum g(a)
  InequalityReport out{reduced.holds, r.rhs, r.lhs, r.mode, std::move(reduced.warnings)};
  return out;
}

}  // namespace beads
