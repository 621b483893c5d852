#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <hopfgreen/json_io.hpp>

namespace hopfgreen {

/// Session configuration consumed by the CLI:
///   {"N": 12,
///    "group": {"free_rank": 0, "torsion": [12]},
///    "a": [4],
///    "chi": {"free": [], "torsion_exp": [1]}}
/// Free images of chi may be given as integers, cyclotomic-expression
/// strings, or serialized CycNum objects.
inline HopfParams params_from_json(const Json& j) {
  try {
    Int n = j.at("N").get<Int>();
    const CycField* field = CycField::get(n);
    const Json& jg = j.at("group");
    GroupSpec group;
    group.free_rank = jg.value("free_rank", Int(0));
    if (jg.contains("torsion"))
      group.torsion = jg.at("torsion").get<std::vector<Int>>();
    GroupElement a = j.at("a").get<std::vector<Int>>();
    const Json& jchi = j.at("chi");
    std::vector<CycNum> chi_free;
    if (jchi.contains("free")) {
      for (const auto& e : jchi.at("free")) {
        if (e.is_number_integer()) {
          chi_free.push_back(CycNum::integer(field, mpz_class(e.get<Int>())));
        } else if (e.is_string()) {
          chi_free.push_back(parse_cyc(field, e.get<std::string>()));
        } else {
          chi_free.push_back(cyc_from_json(e));
        }
      }
    }
    std::vector<Int> chi_tor;
    if (jchi.contains("torsion_exp"))
      chi_tor = jchi.at("torsion_exp").get<std::vector<Int>>();
    return HopfParams::make(std::move(group), n, std::move(a),
                            std::move(chi_free), std::move(chi_tor));
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

inline HopfParams params_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return params_from_json(j);
}

inline Json params_summary(const HopfParams& p) {
  Json j;
  j["N"] = p.field()->order();
  j["case"] = to_string(p.kind());
  j["q"] = p.q().to_string();
  j["s"] = p.s_finite() ? Json(p.s_value()) : Json("infinite");
  j["sbar"] = p.sbar_finite() ? Json(p.sbar_value()) : Json("infinite");
  if (p.kind() == CaseKind::III) {
    j["sprime"] = p.sprime();
    j["xi"] = p.xi().to_string();
  }
  return j;
}

}  // namespace hopfgreen
