#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <hopfgreen/expr.hpp>
#include <hopfgreen/green_suite.hpp>
#include <hopfgreen/oracle.hpp>

namespace hopfgreen {

using Json = nlohmann::json;

/// Wire forms. CycNum: {"num":[...], "den":[...], "N":N} with one integer
/// pair per basis coefficient (decimal strings, so nothing overflows).

inline Json to_json(const CycNum& v) {
  Json num = Json::array(), den = Json::array();
  const CycField* f = v.field();
  Int deg = f ? f->degree() : 1;
  for (Int i = 0; i < deg; ++i) {
    if (i < static_cast<Int>(v.coefficients().size())) {
      num.push_back(v.coefficients()[i].get_num().get_str());
      den.push_back(v.coefficients()[i].get_den().get_str());
    } else {
      num.push_back("0");
      den.push_back("1");
    }
  }
  return Json{{"num", num}, {"den", den}, {"N", f ? f->order() : 1}};
}

inline CycNum cyc_from_json(const Json& j) {
  Int n = j.at("N").get<Int>();
  const CycField* f = CycField::get(n);
  const auto& num = j.at("num");
  const auto& den = j.at("den");
  if (num.size() != den.size()) throw ConfigError("num/den length mismatch");
  CycNum out = CycNum::zero(f);
  for (std::size_t i = 0; i < num.size(); ++i) {
    mpq_class c(mpz_class(num[i].get<std::string>(), 10),
                mpz_class(den[i].get<std::string>(), 10));
    c.canonicalize();
    out = out + CycNum::rational(f, c) *
                    CycNum::root_of_unity(f, static_cast<Int>(i));
  }
  return out;
}

inline Json to_json(const Character& c) {
  Json free_images = Json::array();
  for (const auto& v : c.free_images()) free_images.push_back(to_json(v));
  return Json{{"free", free_images}, {"torsion_exp", c.torsion_exponents()}};
}

inline Json to_json(const HopfParams& p, const Label& lab) {
  if (const auto* nil = std::get_if<NilLabel>(&lab))
    return Json{{"type", "nil"}, {"t", nil->t}, {"char", to_json(nil->lambda)}};
  const auto& nn = std::get<NonNilLabel>(lab);
  return Json{{"type", "nonnil"},
              {"t", nn.t},
              {"char", to_json(nn.sigma)},
              {"beta", to_json(nn.beta)}};
}

/// Array of {type, t, char, beta?, mult} in canonical label order.
inline Json to_json(const HopfParams& p, const Decomposition& d) {
  Json arr = Json::array();
  for (const auto& [lab, mult] : d) {
    Json e = to_json(p, lab);
    e["mult"] = mult;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline Json to_json(const RuleTrace& t) {
  Json branch = Json::object();
  for (const auto& [k, v] : t.branch) branch[k] = v;
  Json j{{"rule_id", t.rule_id}, {"branch", branch}};
  if (!t.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(to_json(c));
    j["children"] = kids;
  }
  return j;
}

/// Per-slice Jordan tables of x^sbar on the invertible part, for audit
/// output alongside oracle decompositions.
inline Json oracle_audit_json(const HopfParams& p, const FittingSplit& fit,
                              const EigenPool& pool) {
  Json audit = Json::object();
  if (fit.inv_dim == 0) return audit;
  for (const auto& [mu, basis] : fit.inv_basis) {
    if (basis.cols() == 0) continue;
    Json table = Json::object();
    for (const auto& [beta, sizes] : invertible_jordan_table(p, fit, mu, pool))
      table[beta.to_string()] = sizes;
    audit[to_string(mu)] =
        Json{{"invertible_dim", basis.cols()}, {"jordan", table}};
  }
  return audit;
}

inline Json to_json(const RelationReport& r) {
  Json j{{"relation_id", r.id}, {"status", r.ok ? "ok" : "failed"}};
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (!r.ok) j["diff"] = r.diff;
  return j;
}

inline Json to_json(const BasisReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(Json{{"family", b.family},
                          {"rows", b.rows},
                          {"det", b.det},
                          {"status", b.ok ? "ok" : "failed"},
                          {"detail", b.detail}});
  return Json{{"truncation", r.truncation},
              {"status", r.ok ? "ok" : "failed"},
              {"blocks", blocks}};
}

}  // namespace hopfgreen
