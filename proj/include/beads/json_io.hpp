#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/majorization.hpp"
#include "beads/oracle.hpp"
#include "beads/planner.hpp"
#include "beads/rational.hpp"

// Canonical JSON forms. Rationals are strings "p/q" in lowest terms (integers
// too, e.g. "3/1"); parsing also accepts a bare integer "3".
namespace beads::io {

using Json = nlohmann::ordered_json;

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::MalformedInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::MalformedRational, "rational must be a string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

// Instances may also carry decimal strings or JSON integers.
inline Rational real_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw Error(ErrorKind::MalformedRational, "expected a decimal or p/q string, got " + j.dump());
  return Rational::parse_real(j.get<std::string>());
}

inline std::vector<Rational> rationals_from_json(const Json& j, Rational (*parse)(const Json&) = rational_from_json) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "expected an array, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse(v));
  return out;
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const std::vector<Rational>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(r.str());
  return arr;
}

inline Json to_json(const BeadConfig& c) {
  return Json{{"mu", c.mu().str()}, {"positions", to_json(std::vector<Rational>(c.positions().begin(), c.positions().end()))}};
}

inline BeadConfig config_from_json(const Json& j) {
  return BeadConfig::make(rational_from_json(field(j, "mu")), rationals_from_json(field(j, "positions")));
}

inline Json to_json(const GapVector& g) {
  return Json{{"mu", g.mu().str()}, {"gaps", to_json(std::vector<Rational>(g.values().begin(), g.values().end()))}};
}

inline GapVector gaps_from_json(const Json& j) {
  return GapVector::make(rational_from_json(field(j, "mu")), rationals_from_json(field(j, "gaps")));
}

inline Json to_json(const SlideMove& m) { return Json{{"bead", m.bead}, {"delta", m.delta.str()}}; }

inline SlideMove move_from_json(const Json& j) {
  const Json& bead = field(j, "bead");
  if (!bead.is_number_integer() || bead.get<long>() < 1)
    throw Error(ErrorKind::MalformedInput, "bead must be a positive integer, got " + bead.dump());
  return {bead.get<std::size_t>(), rational_from_json(field(j, "delta"))};
}

inline Json to_json(const SlidePlan& p) {
  Json arr = Json::array();
  for (const auto& m : p.moves) arr.push_back(to_json(m));
  return arr;
}

// Accepts a bare move array or any object with a "moves" array (PlanResult).
inline SlidePlan plan_from_json(const Json& j) {
  const Json& moves = j.is_array() ? j : field(j, "moves");
  if (!moves.is_array()) throw Error(ErrorKind::MalformedInput, "moves must be an array");
  SlidePlan p;
  for (const auto& m : moves) p.moves.push_back(move_from_json(m));
  return p;
}

inline Json to_json(const PlanResult& r) {
  Json splits = Json::array();
  for (const auto& s : r.split_trace) splits.push_back(Json::array({s.bead, s.depth}));
  return Json{{"moves", to_json(r.plan)},
              {"sweeps_used", r.sweeps_used},
              {"sweep_bound", r.sweep_bound},
              {"splits", std::move(splits)}};
}

inline Json to_json(const VerificationReport& v) {
  return Json{{"ok", v.ok},
              {"failing_step", v.failing_step ? Json(*v.failing_step) : Json(nullptr)},
              {"reason", v.reason ? Json(std::string(to_string(*v.reason))) : Json(nullptr)}};
}

inline Json to_json(const PredecessorInterval& p) {
  return Json{{"bead", p.bead}, {"lower", p.lower.str()}, {"upper", p.upper.str()}, {"empty", p.empty}};
}

inline Json to_json(const ReachabilityVerdict& v) {
  return Json{{"reachable", v.reachable},
              {"states", v.states_explored},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

inline Json to_json(const InequalityReport& r) {
  Json j{{"holds", r.holds}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"mode", std::string(to_string(r.mode))}};
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

inline Json error_json(const Error& e) {
  return Json{{"error", std::string(to_string(e.kind()))}, {"detail", e.detail()}};
}

}  // namespace beads::io
