#pragma once

// JSON form of a Laurent polynomial:
//   {"terms":[{"exp":<int>,"coeff":"<decimal string>"}, ...]}
// with terms sorted by decreasing exponent.

#include <string>
#include <vector>

#include "json.hpp"  // nlohmann/json, vendored

#include "hecke/laurent.hpp"
#include "hecke/roots.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

inline Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json{{"exp", it->exp}, {"coeff", it->coeff.str()}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({t.at("exp").get<int>(), BigInt(t.at("coeff").get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline Json weight_to_json(const WeightVector& lambda) { return Json(lambda.a); }

}  // namespace hecke
