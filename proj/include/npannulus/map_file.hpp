#ifndef NPANNULUS_MAP_FILE_HPP
#define NPANNULUS_MAP_FILE_HPP

// Map files:  {"a0": [re, im], "coeffs": [[k, re, im], ...], "ri": r_i, "re": r_e}

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "npannulus/geometry.hpp"

namespace npannulus {

namespace detail {

inline double json_number(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number()) throw ArgumentError("map file: '" + what + "' must be a number");
  return j.get<double>();
}

inline Complex json_pair(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("map file: '" + what + "' must be [re, im]");
  return {json_number(j[0], what), json_number(j[1], what)};
}

}  // namespace detail

inline AnnulusGeometry geometry_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ArgumentError("map file: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "a0" && key != "coeffs" && key != "ri" && key != "re") {
      throw ArgumentError("map file: unknown key '" + key + "'");
    }
  }
  for (const char* key : {"a0", "coeffs", "ri", "re"}) {
    if (!doc.contains(key)) throw ArgumentError(std::string("map file: missing key '") + key + "'");
  }
  const Complex a0 = detail::json_pair(doc["a0"], "a0");
  const auto& coeffs = doc["coeffs"];
  if (!coeffs.is_array()) throw ArgumentError("map file: 'coeffs' must be an array");
  std::vector<ConformalMap::Term> terms;
  for (const auto& c : coeffs) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer()) {
      throw ArgumentError("map file: each coefficient must be [k, re, im] with integer k");
    }
    terms.push_back({c[0].get<int>(), {detail::json_number(c[1], "coeffs"), detail::json_number(c[2], "coeffs")}});
  }
  return AnnulusGeometry(ConformalMap(a0, std::move(terms)), detail::json_number(doc["ri"], "ri"),
                         detail::json_number(doc["re"], "re"));
}

inline nlohmann::json geometry_to_json(const AnnulusGeometry& geom) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& t : geom.map.terms()) coeffs.push_back({t.k, t.a.real(), t.a.imag()});
  return {{"a0", {geom.map.a0().real(), geom.map.a0().imag()}},
          {"coeffs", coeffs},
          {"ri", geom.r_inner},
          {"re", geom.r_outer}};
}

inline AnnulusGeometry parse_map_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("map file: invalid JSON: ") + e.what());
  }
  return geometry_from_json(doc);
}

inline AnnulusGeometry load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open map file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_map_text(ss.str());
}

/// The distorted annulus of the reference experiment:
/// Psi(w) = w + (0.3+0.5i)/w - (0.2+0.1i)/w^3 + 0.1i/w^5 + 0.05i/w^6 + 0.01i/w^7,
/// r_i = 1.1, r_e = 1.15.
inline AnnulusGeometry reference_geometry() {
  return AnnulusGeometry(ConformalMap({0.0, 0.0}, {{1, {0.3, 0.5}},
                                                   {3, {-0.2, -0.1}},
                                                   {5, {0.0, 0.1}},
                                                   {6, {0.0, 0.05}},
                                                   {7, {0.0, 0.01}}}),
                         1.1, 1.15);
}

}  // namespace npannulus

#endif  // NPANNULUS_MAP_FILE_HPP
