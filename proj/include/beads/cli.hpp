#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/json_io.hpp"
#include "beads/majorization.hpp"
#include "beads/oracle.hpp"
#include "beads/planner.hpp"

// Command-line front end. Every subcommand reads canonical JSON and writes a
// single JSON line. Exit codes: 0 holds / succeeded, 1 fails or no
// certificate, 2 input or precondition error.
namespace beads::cli {

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kBadInput = 2;

namespace detail {

using io::Json;

struct Options {
  std::string input;
  std::string target;
  std::string plan = "-";
  std::string epsilon;
  std::optional<std::size_t> budget;
  long denominator = 1;
  std::size_t max_states = 1'000'000;
  std::string fn;
  std::uint64_t seed = 0;
  std::size_t beads = 3;
  bool slideable_only = false;
  bool concave_sum = false;
  bool concave_schur = false;
  bool convex_schur = false;
};

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Json load(const std::string& source) {
    if (source.empty()) throw Error(ErrorKind::MalformedInput, "missing input path");
    std::string text;
    if (source == "-") {
      // stdin is consumed once; later "-" sources see the same document
      if (!stdin_text_) stdin_text_.emplace(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
      text = *stdin_text_;
    } else {
      std::ifstream f(source);
      if (!f) throw Error(ErrorKind::MalformedInput, "cannot open '" + source + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::MalformedInput, std::string("malformed JSON: ") + e.what());
    }
  }

  int emit(const Json& j, int code) {
    out_ << j.dump() << '\n';
    return code;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::string> stdin_text_;
};

// Source and target either come from --input/--target or from one
// {"a": .., "b": ..} document passed as --input (as written by `random`).
inline std::pair<BeadConfig, BeadConfig> load_pair(Context& ctx, const Options& o) {
  Json first = ctx.load(o.input);
  if (o.target.empty()) {
    if (first.is_object() && first.contains("a") && first.contains("b"))
      return {io::config_from_json(first["a"]), io::config_from_json(first["b"])};
    throw Error(ErrorKind::MalformedInput, "--target is required");
  }
  return {io::config_from_json(first), io::config_from_json(ctx.load(o.target))};
}

inline std::vector<std::string> reals(const Json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& r : io::rationals_from_json(io::field(j, key), io::real_from_json)) out.push_back(r.str());
  return out;
}

inline int validate(Context& ctx, const Options& o) {
  Json j = ctx.load(o.input);
  try {
    BeadConfig c = io::config_from_json(j);
    return ctx.emit(Json{{"valid", true}, {"config", io::to_json(c)}, {"gaps", io::to_json(gaps(c))}}, kOk);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotMonotone) throw;
    return ctx.emit(Json{{"valid", false}, {"error", std::string(to_string(e.kind()))}, {"detail", e.detail()}},
                    kFails);
  }
}

inline int gaps_cmd(Context& ctx, const Options& o) {
  Json j = ctx.load(o.input);
  if (j.is_object() && j.contains("gaps")) return ctx.emit(io::to_json(from_gaps(io::gaps_from_json(j))), kOk);
  return ctx.emit(io::to_json(gaps(io::config_from_json(j))), kOk);
}

inline int order(Context& ctx, const Options& o) {
  auto [a, b] = load_pair(ctx, o);
  bool holds = leq(a, b);
  return ctx.emit(Json{{"leq", holds}}, holds ? kOk : kFails);
}

inline int slideable(Context& ctx, const Options& o) {
  bool s = is_slideable_target(io::config_from_json(ctx.load(o.input)));
  return ctx.emit(Json{{"slideable", s}}, s ? kOk : kFails);
}

inline int plan_cmd(Context& ctx, const Options& o) {
  auto [a, b] = load_pair(ctx, o);
  if (!o.epsilon.empty() && o.budget)
    throw Error(ErrorKind::MalformedInput, "--epsilon and --budget are mutually exclusive");
  if (!o.epsilon.empty()) return ctx.emit(io::to_json(approx_plan(a, b, Rational::parse(o.epsilon))), kOk);
  if (o.budget) {
    auto r = try_plan(a, b, *o.budget);
    if (!r) return ctx.emit(Json{{"moves", nullptr}, {"reason", "NoCertificate"}}, kFails);
    return ctx.emit(io::to_json(*r), kOk);
  }
  return ctx.emit(io::to_json(plan(a, b)), kOk);
}

inline int verify(Context& ctx, const Options& o) {
  auto [a, b] = load_pair(ctx, o);
  SlidePlan p = io::plan_from_json(ctx.load(o.plan));
  VerificationReport r = verify_plan(a, p, b);
  return ctx.emit(io::to_json(r), r.ok ? kOk : kFails);
}

inline int perturb(Context& ctx, const Options& o) {
  if (o.epsilon.empty()) throw Error(ErrorKind::MalformedInput, "--epsilon is required");
  return ctx.emit(io::to_json(epsilon_sleeve(io::config_from_json(ctx.load(o.input)), Rational::parse(o.epsilon))),
                  kOk);
}

inline int counterexample(Context& ctx, const Options& o) {
  return ctx.emit(io::to_json(converse_counterexample(io::config_from_json(ctx.load(o.input)))), kOk);
}

inline int predecessors(Context& ctx, const Options& o) {
  BeadConfig b = io::config_from_json(ctx.load(o.input));
  Json intervals = Json::array();
  for (std::size_t k = 1; k <= b.size(); ++k) intervals.push_back(io::to_json(one_step_predecessor_interval(b, k)));
  bool any = has_predecessor(b);
  return ctx.emit(Json{{"intervals", std::move(intervals)}, {"has_predecessor", any}}, any ? kOk : kFails);
}

inline int schur(Context& ctx, const Options& o) {
  int modes = int(o.concave_sum) + int(o.concave_schur) + int(o.convex_schur);
  if (modes != 1)
    throw Error(ErrorKind::MalformedInput, "pick exactly one of --concave-sum, --concave-schur, --convex-schur");
  if (o.fn.empty()) throw Error(ErrorKind::MalformedInput, "--fn is required");
  TestFunction f = lookup_function(o.fn);
  Json j = ctx.load(o.input);
  InequalityReport r;
  if (o.convex_schur) {
    auto a = io::rationals_from_json(io::field(j, "a"), io::real_from_json);
    auto b = io::rationals_from_json(io::field(j, "b"), io::real_from_json);
    r = check_schur_convex(a, b, f);
  } else {
    MajorizationInstance inst{io::rationals_from_json(io::field(j, "x"), io::real_from_json),
                              io::rationals_from_json(io::field(j, "y"), io::real_from_json),
                              o.concave_sum ? MajorizationMode::PrefixDominance : MajorizationMode::EqualTotals};
    if (o.concave_sum) {
      Rational mu(0);
      if (j.contains("mu")) {
        mu = io::real_from_json(j["mu"]);
      } else if (!inst.x.empty() && !inst.y.empty()) {
        mu = std::min(*std::min_element(inst.x.begin(), inst.x.end()), inst.y.front());
      }
      r = check_concave_sum_inequality(inst, f, mu);
    } else {
      r = check_concave_schur(inst, f);
    }
  }
  return ctx.emit(io::to_json(r), r.holds ? kOk : kFails);
}

inline int oracle(Context& ctx, const Options& o) {
  auto [a, b] = load_pair(ctx, o);
  ReachabilityVerdict v = lattice_reachable(a, b, LatticeSpec{o.denominator, o.max_states});
  return ctx.emit(io::to_json(v), v.reachable ? kOk : kFails);
}

inline int random(Context& ctx, const Options& o) {
  auto [a, b] = random_pair(o.beads, o.seed, o.slideable_only);
  return ctx.emit(Json{{"a", io::to_json(a)}, {"b", io::to_json(b)}}, kOk);
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  using detail::Json;
  detail::Options o;
  detail::Context ctx(in, out);

  CLI::App app{"Bead configurations: order checks, slide certificates, majorization inequalities", "beads"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "configuration JSON (path or -)"); };
  auto add_target = [&](CLI::App* sub) { sub->add_option("--target", o.target, "target configuration JSON (path or -)"); };

  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;
  auto command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers.emplace_back(sub, [&ctx, &o, fn] { return fn(ctx, o); });
    return sub;
  };

  add_input(command("validate", "check that a configuration is monotone", detail::validate));
  add_input(command("gaps", "configuration -> gap vector, or gap vector -> configuration", detail::gaps_cmd));
  {
    auto* s = command("order", "componentwise order A <= B", detail::order);
    add_input(s);
    add_target(s);
  }
  add_input(command("slideable", "is every A <= B slideable to B", detail::slideable));
  {
    auto* s = command("plan", "build a slide certificate from A to B", detail::plan_cmd);
    add_input(s);
    add_target(s);
    s->add_option("--epsilon", o.epsilon, "plan to the epsilon-sleeve of B (p/q)");
    s->add_option("--budget", o.budget, "best effort with at most N sweeps per level");
  }
  {
    auto* s = command("verify", "replay a slide plan", detail::verify);
    add_input(s);
    add_target(s);
    s->add_option("--plan", o.plan, "plan JSON (path or -)");
  }
  {
    auto* s = command("perturb", "epsilon-sleeve B_k + 2^k eps", detail::perturb);
    add_input(s);
    s->add_option("--epsilon", o.epsilon, "positive rational p/q");
  }
  add_input(command("counterexample", "C <= B that cannot be slid to B", detail::counterexample));
  add_input(command("predecessors", "one-step predecessor intervals", detail::predecessors));
  {
    auto* s = command("schur", "majorization inequalities", detail::schur);
    add_input(s);
    s->add_flag("--concave-sum", o.concave_sum, "sum f(x) <= sum f(y), f nondecreasing concave");
    s->add_flag("--concave-schur", o.concave_schur, "sum f(x) <= sum f(y), f concave, equal totals");
    s->add_flag("--convex-schur", o.convex_schur, "sum g(a) >= sum g(b), g convex, equal totals");
    s->add_option("--fn", o.fn, "sqrt | log1p | square | exp | pwl:x0,y0;x1,y1;...");
  }
  {
    auto* s = command("oracle", "lattice breadth-first reachability", detail::oracle);
    add_input(s);
    add_target(s);
    s->add_option("--denominator", o.denominator, "lattice spacing 1/d");
    s->add_option("--max-states", o.max_states, "state budget");
  }
  {
    auto* s = command("random", "seeded random pair A <= B", detail::random);
    s->add_option("--n", o.beads, "number of beads");
    s->add_option("--seed", o.seed, "generator seed");
    s->add_flag("--slideable", o.slideable_only, "draw a slideable target");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return ctx.emit(Json{{"error", "MalformedInput"}, {"detail", e.what()}}, kBadInput);
  }

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn();
  } catch (const Error& e) {
    return ctx.emit(io::error_json(e), kBadInput);
  } catch (const std::exception& e) {
    return ctx.emit(Json{{"error", "Internal"}, {"detail", e.what()}}, kBadInput);
  }
  return kBadInput;
}

}  // namespace beads::cli
