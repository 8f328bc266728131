#pragma once

// JSON reports. Rationals are written as "p/q" strings, assignments as arrays.

#include "addsparse/rational.hpp"
#include "addsparse/sparsifier.hpp"
#include "addsparse/sparsifier_types.hpp"
#include "addsparse/verifier.hpp"

#include <json.hpp>

#include <string>

namespace addsparse {

inline nlohmann::json assignment_json(const Assignment& a) {
  nlohmann::json values = nlohmann::json::array();
  for (Digit x : a.values()) values.push_back(x);
  return values;
}

inline nlohmann::json sparsify_report(const Sparsifier& sp, std::uint64_t seed, Strategy strategy,
                                      double constant) {
  nlohmann::json j;
  j["base_edges"] = sp.base_edge_count;
  j["kept_edges"] = sp.kept_count();
  j["kept"] = sp.kept;
  j["scale"] = to_string(sp.scale);
  j["epsilon"] = to_string(sp.epsilon);
  j["attempts"] = sp.attempts;
  j["seed"] = seed;
  j["strategy"] = to_string(strategy);
  j["constant"] = constant;
  if (sp.certified) {
    j["certified"] = true;
    j["certification"] = sp.certified->mode;
    j["domains"] = sp.certified->domains;
    j["max_margin"] = to_string(sp.certified->max_margin);
    j["witness"] = assignment_json(sp.certified->witness);
    j["checked"] = sp.certified->checked;
  } else {
    j["certified"] = false;
    j["max_margin"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

inline nlohmann::json verify_report(const CertReport& r, const std::string& predicate) {
  nlohmann::json j;
  j["verdict"] = r.holds() ? "pass" : "fail";
  j["max_margin"] = to_string(r.max_margin);
  j["witness"] = assignment_json(r.witness);
  j["min_feasible_epsilon"] = to_string(r.min_feasible);
  j["mode"] = to_string(r.mode);
  j["enumeration"] = to_string(r.enumeration);
  j["epsilon"] = to_string(r.epsilon);
  j["checked"] = r.checked;
  j["predicate"] = predicate;
  return j;
}

}  // namespace addsparse
