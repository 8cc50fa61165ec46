#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wandhc/critical.hpp"
#include "wandhc/extremality.hpp"
#include "wandhc/oracle.hpp"
#include "wandhc/recursion.hpp"
#include "wandhc/solvers.hpp"

// JSON bindings for the record types the command line emits. Field names
// are part of the output contract; keep them stable.

namespace wandhc {

inline void to_json(nlohmann::json& j, const PeriodicState& s) {
  j = {{"t1", s.t1}, {"t2", s.t2}, {"z1", s.z1}, {"z2", s.z2}};
}

inline void from_json(const nlohmann::json& j, PeriodicState& s) {
  j.at("t1").get_to(s.t1);
  j.at("t2").get_to(s.t2);
  j.at("z1").get_to(s.z1);
  j.at("z2").get_to(s.z2);
}

inline InvariantSetTag invariant_set_from_string(const std::string& s) {
  if (s == "I1") return InvariantSetTag::I1;
  if (s == "I2") return InvariantSetTag::I2;
  if (s == "I3") return InvariantSetTag::I3;
  if (s == "I4") return InvariantSetTag::I4;
  if (s == "NONE") return InvariantSetTag::none;
  throw std::invalid_argument("unknown invariant set tag: " + s);
}

inline SolutionKind solution_kind_from_string(const std::string& s) {
  if (s == "TI") return SolutionKind::translation_invariant;
  if (s == "TWO_PERIODIC") return SolutionKind::two_periodic;
  throw std::invalid_argument("unknown solution kind: " + s);
}

inline SolveMethod solve_method_from_string(const std::string& s) {
  if (s == "CLOSED_FORM_K2") return SolveMethod::closed_form_k2;
  if (s == "PARAM_K3") return SolveMethod::param_k3;
  if (s == "BISECTION_2CYCLE") return SolveMethod::bisection_2cycle;
  if (s == "TI_BISECTION") return SolveMethod::ti_bisection;
  if (s == "NEWTON_4D") return SolveMethod::newton_4d;
  throw std::invalid_argument("unknown solve method: " + s);
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "EXTREME") return Verdict::extreme;
  if (s == "NOT_EXTREME") return Verdict::not_extreme;
  if (s == "INCONCLUSIVE") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict: " + s);
}

inline void to_json(nlohmann::json& j, const SolutionRecord& r) {
  j = {{"state", r.state},          {"tag", to_string(r.tag)},
       {"kind", to_string(r.kind)}, {"k", r.k},
       {"lambda", r.lambda},        {"residual", r.residual},
       {"method", to_string(r.method)}};
}

inline void from_json(const nlohmann::json& j, SolutionRecord& r) {
  j.at("state").get_to(r.state);
  r.tag = invariant_set_from_string(j.at("tag").get<std::string>());
  r.kind = solution_kind_from_string(j.at("kind").get<std::string>());
  j.at("k").get_to(r.k);
  j.at("lambda").get_to(r.lambda);
  j.at("residual").get_to(r.residual);
  r.method = solve_method_from_string(j.at("method").get<std::string>());
}

inline void to_json(nlohmann::json& j, const CriticalValue& c) {
  j = {{"k", c.k}, {"lambda_cr", c.lambda_cr}, {"source", to_string(c.source)}};
}

inline void from_json(const nlohmann::json& j, CriticalValue& c) {
  j.at("k").get_to(c.k);
  j.at("lambda_cr").get_to(c.lambda_cr);
  const auto s = j.at("source").get<std::string>();
  if (s == "FORMULA")
    c.source = CriticalSource::formula;
  else if (s == "NUMERIC_FOLD")
    c.source = CriticalSource::numeric_fold;
  else
    throw std::invalid_argument("unknown critical source: " + s);
}

inline void to_json(nlohmann::json& j, const ExtremalityReport& r) {
  j = {{"k", r.k},
       {"lambda", r.lambda},
       {"z", r.z},
       {"t", r.t},
       {"s2", r.s2},
       {"ks_value", r.ks_value},
       {"ks_nonextremal", r.ks_nonextremal},
       {"kappa", r.kappa},
       {"gamma", r.gamma},
       {"msw_value", r.msw_value},
       {"msw_extremal", r.msw_extremal},
       {"verdict", to_string(r.verdict)}};
}

inline void from_json(const nlohmann::json& j, ExtremalityReport& r) {
  j.at("k").get_to(r.k);
  j.at("lambda").get_to(r.lambda);
  j.at("z").get_to(r.z);
  j.at("t").get_to(r.t);
  j.at("s2").get_to(r.s2);
  j.at("ks_value").get_to(r.ks_value);
  j.at("ks_nonextremal").get_to(r.ks_nonextremal);
  j.at("kappa").get_to(r.kappa);
  j.at("gamma").get_to(r.gamma);
  j.at("msw_value").get_to(r.msw_value);
  j.at("msw_extremal").get_to(r.msw_extremal);
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

inline void to_json(nlohmann::json& j, const ConsistencyResidual& c) {
  j = {{"max_abs", c.max_abs}, {"config_count", c.config_count}};
}

inline void from_json(const nlohmann::json& j, ConsistencyResidual& c) {
  j.at("max_abs").get_to(c.max_abs);
  j.at("config_count").get_to(c.config_count);
}

}  // namespace wandhc
