// Group spec files: JSON with exact rational gram entries.
//
//   {
//     "name": "cmm",
//     "dim": 2,
//     "gram": [[5, 3], [3, 5]],          // integers or strings like "3/2"
//     "generators": [[[0,1],[1,0]], [[0,-1],[-1,0]]],
//     "generator_names": ["s1", "s2"],   // optional
//     "max_closure": 20000               // optional
//   }
//
// Gram entries are parsed bit-exactly; floating point numbers are rejected.

#pragma once

#include "group.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <regex>
#include <string>

namespace isoconj {

namespace detail {

inline Rat parse_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(long(v.get<long long>()));
  if (v.is_string()) {
    static const std::regex rat_re("[+-]?[0-9]+(/[0-9]+)?");
    std::string s = v.get<std::string>();
    if (!std::regex_match(s, rat_re))
      throw std::invalid_argument(where + ": bad rational '" + s + "'");
    Rat r(s);
    if (r.get_den() == 0) throw std::invalid_argument(where + ": zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument(where + ": gram entries must be integers or \"p/q\" strings");
}

} // namespace detail

inline GroupSpec group_spec_from_json(const nlohmann::json& j) {
  GroupSpec spec;
  if (!j.is_object()) throw std::invalid_argument("group spec: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("group spec: missing integer field 'dim'");
  spec.dim = j["dim"].get<int>();
  if (spec.dim < 1) throw std::invalid_argument("group spec: dim must be at least 1");
  spec.name = j.value("name", std::string("unnamed"));

  if (!j.contains("gram") || !j["gram"].is_array() || int(j["gram"].size()) != spec.dim)
    throw std::invalid_argument("group spec: 'gram' must be a dim x dim array");
  spec.gram = RatMatrix(spec.dim, spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    const auto& row = j["gram"][i];
    if (!row.is_array() || int(row.size()) != spec.dim)
      throw std::invalid_argument("group spec: 'gram' must be a dim x dim array");
    for (int k = 0; k < spec.dim; ++k)
      spec.gram.at(i, k) = detail::parse_rational(row[k], "gram[" + std::to_string(i) + "][" +
                                                              std::to_string(k) + "]");
  }

  if (!j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("group spec: missing array field 'generators'");
  for (const auto& gj : j["generators"]) {
    if (!gj.is_array() || int(gj.size()) != spec.dim)
      throw std::invalid_argument("group spec: each generator must be a dim x dim integer array");
    IntMatrix m(spec.dim, spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
      const auto& row = gj[i];
      if (!row.is_array() || int(row.size()) != spec.dim)
        throw std::invalid_argument("group spec: each generator must be a dim x dim integer array");
      for (int k = 0; k < spec.dim; ++k) {
        if (!row[k].is_number_integer())
          throw std::invalid_argument("group spec: generator entries must be integers");
        m.at(i, k) = long(row[k].get<long long>());
      }
    }
    spec.generators.push_back(std::move(m));
  }

  if (j.contains("generator_names")) {
    if (!j["generator_names"].is_array())
      throw std::invalid_argument("group spec: 'generator_names' must be an array of strings");
    static const std::regex reserved("g[0-9]+|t");
    for (const auto& nj : j["generator_names"]) {
      if (!nj.is_string())
        throw std::invalid_argument("group spec: 'generator_names' must be an array of strings");
      std::string nm = nj.get<std::string>();
      if (nm.empty() || std::regex_match(nm, reserved))
        throw std::invalid_argument("group spec: generator name '" + nm + "' is reserved");
      spec.generator_names.push_back(nm);
    }
  }

  if (j.contains("max_closure")) {
    if (!j["max_closure"].is_number_integer() || j["max_closure"].get<long long>() < 1)
      throw std::invalid_argument("group spec: 'max_closure' must be a positive integer");
    spec.max_closure = long(j["max_closure"].get<long long>());
  }
  return spec;
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("group file '" + path + "': " + e.what());
  }
  return group_spec_from_json(j);
}

} // namespace isoconj
