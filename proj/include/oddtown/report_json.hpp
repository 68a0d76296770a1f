#pragma once

// JSON views of families, search results and verification reports. Element
// labels are 1-based, matching the family file format.

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "oddtown/search.hpp"
#include "oddtown/set_family.hpp"
#include "oddtown/verify.hpp"

namespace oddtown {

using Json = nlohmann::ordered_json;

inline Json to_json(const BitSubset& s) {
  Json a = Json::array();
  for (std::size_t e : s.elements()) a.push_back(e + 1);
  return a;
}

inline Json to_json(const SetFamily& f) {
  Json a = Json::array();
  for (const auto& s : f) a.push_back(to_json(s));
  return a;
}

inline Json to_json(const Rational& r) {
  return Json{{"num", r.numerator()},
              {"den", r.denominator()},
              {"value", static_cast<double>(r.numerator()) / static_cast<double>(r.denominator())}};
}

inline Json to_json(const SearchSpec& s) {
  Json j{{"n", s.n}, {"m", s.m}, {"class", to_string(s.set_class)}};
  if (s.set_class == SetClass::uniform) j["k"] = s.k;
  j["objective"] = to_string(s.objective);
  if (s.objective == Objective::ckt) j["t"] = s.t;
  j["mode"] = to_string(s.mode);
  j["threads"] = s.threads;
  j["budget_nodes"] = s.budget.node_limit;
  j["budget_secs"] = std::chrono::duration_cast<std::chrono::seconds>(s.budget.time_limit).count();
  if (s.mode == SearchMode::local) {
    j["seed"] = s.seed;
    j["restarts"] = s.restarts;
  }
  return j;
}

inline Json to_json(const SearchResult& r) {
  return Json{{"best_value", r.best_value},
              {"witness", to_json(r.witness)},
              {"optimal", r.optimal},
              {"nodes_explored", r.nodes_explored},
              {"elapsed_ms", r.elapsed.count()},
              {"spec", to_json(r.spec)}};
}

inline Json to_json(const VerifyReport& r) {
  Json j{{"statement", to_string(r.statement)}, {"n", r.n}, {"s", r.s}};
  if (r.statement == Statement::prob_uniform) j["k"] = r.k;
  j["m"] = r.result.spec.m;
  j["verdict"] = to_string(r.verdict);
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  j["minimum"] = r.result.best_value;
  j["proven_statement"] = r.proven;
  j["result"] = to_json(r.result);
  return j;
}

}  // namespace oddtown
