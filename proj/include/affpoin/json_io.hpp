#pragma once

// JSON forms of the value types.

#include "affpoin/genfun.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace affpoin {

using Json = nlohmann::json;

inline Json to_json(const AffineRoot& g) { return Json{{"beta", g.beta}, {"k", g.k}}; }

inline Json to_json(const AffineElement& s) { return Json{{"x", s.x.matrix}, {"alpha", s.alpha}}; }

inline Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max<long>(p.degree(), 0)); ++i)
    a.push_back(to_string(p.coeff(i)));
  return a;
}

// {"num": ["p/q", ...], "den": [...]} in ascending degree.
inline Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline Json to_json(const std::vector<RationalFunction>& descent) {
  Json a = Json::array();
  for (std::size_t d = 0; d < descent.size(); ++d) a.push_back(Json::array({d, to_json(descent[d])}));
  return a;
}

inline AffineRoot affine_root_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("beta") || !j.contains("k"))
    throw ValidationError("affine root must be an object with \"beta\" and \"k\"");
  AffineRoot g;
  try {
    g.beta = j.at("beta").get<IntVec>();
    g.k = j.at("k").get<Int>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad affine root: ") + e.what());
  }
  return g;
}

// Accepts {"reflections": [...]} or a bare array of affine roots.
inline std::vector<AffineRoot> reflections_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("reflections") ? j.at("reflections") : j;
  if (!list.is_array()) throw ValidationError("reflection set must be a JSON array or {\"reflections\": [...]}");
  std::vector<AffineRoot> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      out.push_back(affine_root_from_json(list[i]));
    } catch (const ValidationError& e) {
      throw ValidationError("reflection " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

inline Json reflections_to_json(const std::vector<AffineRoot>& roots) {
  Json a = Json::array();
  for (const auto& g : roots) a.push_back(to_json(g));
  return Json{{"reflections", a}};
}

inline IntMatrix cartan_from_json(const std::string& text) {
  try {
    return Json::parse(text).get<IntMatrix>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad Cartan matrix: ") + e.what());
  }
}

}  // namespace affpoin
