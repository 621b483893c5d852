// Command-line front end: session config, expression parsing, engine
// invocation and machine-readable output.
//
// Exit codes: 0 success, 1 failure (parse error, failed suite), 2 engine
// mismatch, 3 incomplete eigenvalue pool, 4 bad config.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hopfgreen/config.hpp>
#include <hopfgreen/hopfgreen.hpp>
#include <hopfgreen/json_io.hpp>

using namespace hopfgreen;

namespace {

struct Session {
  std::string config_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  Int trunc = 30;
  std::vector<std::string> char_exprs;
  std::vector<std::string> root_exprs;

  // inline parameter flags, used when no config file is given
  Int n = 0;
  Int free_rank = 0;
  std::vector<Int> torsion;
  std::vector<Int> a;
  std::vector<std::string> chi_free;
  std::vector<Int> chi_tor;

  bool json() const { return format == "json"; }

  HopfParams load() const {
    if (!config_path.empty()) return params_from_file(config_path);
    if (n <= 0)
      throw ConfigError("no session: pass --config FILE or inline --N flags");
    const CycField* field = CycField::get(n);
    std::vector<CycNum> free_images;
    for (const auto& e : chi_free) free_images.push_back(parse_cyc(field, e));
    return HopfParams::make(GroupSpec{free_rank, torsion}, n, a, free_images,
                            chi_tor);
  }

  std::vector<Character> sample_chars(const HopfParams& p) const {
    std::vector<Character> out{p.chi()};
    for (const auto& e : char_exprs)
      out.push_back(ExprParser(p, e).parse_character());
    return out;
  }

  std::vector<CycNum> sample_roots(const HopfParams& p) const {
    std::vector<CycNum> out;
    for (const auto& e : root_exprs) {
      CycNum r = parse_cyc(p, e);
      if (r.is_zero()) throw InvalidArgument("--root must be nonzero");
      out.push_back(r);
    }
    if (out.empty()) out.push_back(CycNum::one(p.field()));
    return out;
  }
};

void add_session_flags(CLI::App* cmd, Session& s) {
  cmd->add_option("--config", s.config_path, "session config JSON file");
  cmd->add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", s.seed, "RNG seed for sampled suites");
  cmd->add_option("--trunc", s.trunc, "dimension truncation bound");
  cmd->add_option("--char", s.char_exprs,
                  "extra sample character (chr(...) expression), repeatable");
  cmd->add_option("--root", s.root_exprs,
                  "sample root for x generators / eta values, repeatable");
  cmd->add_option("--N", s.n, "inline config: cyclotomic order");
  cmd->add_option("--free-rank", s.free_rank, "inline config: free rank of G");
  cmd->add_option("--torsion", s.torsion, "inline config: torsion orders");
  cmd->add_option("--a", s.a, "inline config: coordinates of a");
  cmd->add_option("--chi-free", s.chi_free,
                  "inline config: chi images on free generators");
  cmd->add_option("--chi-tor", s.chi_tor,
                  "inline config: chi exponents on torsion generators");
}

int run_tensor(const Session& s, const std::string& left,
               const std::string& right, const std::string& engine) {
  HopfParams p = s.load();
  Decomposition a = parse_module_expr(p, left);
  Decomposition b = parse_module_expr(p, right);

  std::optional<RuleResult> rules;
  if (engine == "rules" || engine == "both") rules = tensor_decomp(p, a, b);

  std::optional<Decomposition> oracle;
  Json audit;
  if (engine == "oracle" || engine == "both") {
    EigenPool pool;
    pool.add_labels(a);
    pool.add_labels(b);
    if (rules) pool.add_labels(rules->decomp);
    for (const auto& r : s.sample_roots(p))
      if (p.kind() == CaseKind::III) pool.add(r.pow(p.sprime()), r);
    MatrixRep rep =
        tensor_rep(p, build_decomposition(p, a), build_decomposition(p, b));
    FittingSplit fit = fitting_split(p, rep);
    if (s.json()) audit = oracle_audit_json(p, fit, pool);
    Decomposition out = decompose_nilpotent(p, fit);
    out += decompose_invertible(p, fit, pool);
    if (out.dim(p) != rep.dim)
      throw InternalError("oracle dimension audit failed");
    oracle = std::move(out);
  }

  bool mismatch = rules && oracle && !(rules->decomp == *oracle);
  if (s.json()) {
    Json out;
    out["schema"] = "hopfgreen/1";
    if (rules) {
      out["rules"] = to_json(p, rules->decomp);
      out["trace"] = to_json(rules->trace);
    }
    if (oracle) {
      out["oracle"] = to_json(p, *oracle);
      out["audit"] = audit;
    }
    if (rules && oracle) {
      out["status"] = mismatch ? "MISMATCH" : "MATCH";
      if (mismatch)
        out["diff"] = to_string(RingElem::from(rules->decomp) -
                                RingElem::from(*oracle));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (rules) std::cout << "rules:  " << to_string(rules->decomp) << "\n";
    if (oracle) std::cout << "oracle: " << to_string(*oracle) << "\n";
    if (rules && oracle) {
      std::cout << (mismatch ? "MISMATCH" : "MATCH") << "\n";
      if (mismatch)
        std::cout << "diff: "
                  << to_string(RingElem::from(rules->decomp) -
                               RingElem::from(*oracle))
                  << "\n";
    }
  }
  return mismatch ? 2 : 0;
}

// Accepts either grammar per side: a generator polynomial, or a module
// expression taken as a ring element in the indecomposable basis.
int run_green_mul(const Session& s, const std::string& left,
                  const std::string& right) {
  HopfParams p = s.load();
  auto read_side = [&](const std::string& text,
                       std::optional<GenPoly>& poly) -> RingElem {
    try {
      GenPoly g = parse_genpoly(p, text);
      poly = g;
      return expand(p, g);
    } catch (const ParseError&) {
      return RingElem::from(parse_module_expr(p, text));
    }
  };
  std::optional<GenPoly> pa, pb;
  RingElem va = read_side(left, pa);
  RingElem vb = read_side(right, pb);
  RingElem value = ring_mul(p, va, vb);
  std::optional<GenPoly> prod;
  if (pa && pb) prod = genpoly_mul(p, *pa, *pb);
  if (s.json()) {
    Json out;
    out["schema"] = "hopfgreen/1";
    if (prod) out["product"] = to_string(*prod);
    out["value"] = to_string(value);
    std::cout << out.dump(2) << "\n";
  } else {
    if (prod) std::cout << "product: " << to_string(*prod) << "\n";
    std::cout << "value:   " << to_string(value) << "\n";
  }
  return 0;
}

int run_green_express(const Session& s, const std::string& module_expr) {
  HopfParams p = s.load();
  Decomposition d = parse_module_expr(p, module_expr);
  if (d.size() != 1 || d.begin()->second != 1)
    throw InvalidArgument("express takes a single indecomposable module");
  const Label& lab = d.begin()->first;
  GenPoly poly;
  if (const auto* nil = std::get_if<NilLabel>(&lab)) {
    poly = express_nil(p, nil->t, nil->lambda);
  } else {
    const auto& nn = std::get<NonNilLabel>(lab);
    poly = express_nonnil(p, nn.t, nn.sigma, nn.eta);
  }
  if (s.json()) {
    Json out;
    out["schema"] = "hopfgreen/1";
    out["module"] = to_string(lab);
    out["poly"] = to_string(poly);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(poly) << "\n";
  }
  return 0;
}

int run_green_relations(const Session& s) {
  HopfParams p = s.load();
  RelationSuiteOptions opt;
  opt.seed = s.seed;
  opt.chars = s.sample_chars(p);
  opt.roots = s.sample_roots(p);
  auto reports = relation_suite(p, opt);
  Int failed = 0;
  if (s.json()) {
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(to_json(r));
      if (!r.ok) ++failed;
    }
    std::cout << Json{{"schema", "hopfgreen/1"}, {"relations", arr}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok ? "ok   " : "FAIL ") << r.id << "\n";
      if (!r.ok) {
        std::cout << "  lhs:  " << r.lhs << "\n  rhs:  " << r.rhs
                  << "\n  diff: " << r.diff << "\n";
        ++failed;
      }
    }
    std::cout << reports.size() << " relations, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int run_green_basis(const Session& s) {
  HopfParams p = s.load();
  BasisCheckOptions opt;
  opt.truncation = s.trunc;
  opt.chars = s.sample_chars(p);
  opt.roots = s.sample_roots(p);
  BasisReport rep = basis_change_check(p, opt);
  if (s.json()) {
    Json out = to_json(rep);
    out["schema"] = "hopfgreen/1";
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& b : rep.blocks) {
      std::cout << (b.ok ? "ok   " : "FAIL ") << b.family << " block: " << b.rows
                << " rows, det = " << b.det;
      if (!b.detail.empty()) std::cout << " (" << b.detail << ")";
      std::cout << "\n";
    }
  }
  return rep.ok ? 0 : 1;
}

int run_selftest_cmd(const Session& s, Int budget, Int dim_cap, bool tamper) {
  HopfParams p = s.load();
  SelftestOptions opt;
  opt.seed = s.seed;
  opt.dim_cap = dim_cap;
  opt.pair_budget = budget;
  opt.tamper = tamper;
  opt.chars = s.sample_chars(p);
  opt.roots = s.sample_roots(p);
  SelftestReport rep = run_selftest(p, opt);
  if (s.json()) {
    Json out;
    out["schema"] = "hopfgreen/1";
    out["summary"] = summary(rep);
    out["ok"] = rep.ok();
    out["failures"] = rep.failures;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << summary(rep) << "\n";
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (rep.ok() ? "selftest passed" : "selftest FAILED") << "\n";
  }
  if (rep.ok()) return 0;
  return rep.mismatches > 0 ? 2 : 1;
}

int run_config_validate(const Session& s) {
  HopfParams p = s.load();
  Json out = params_summary(p);
  if (s.json()) {
    out["schema"] = "hopfgreen/1";
    out["status"] = "ok";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ok: case " << out["case"].get<std::string>() << ", q = "
              << out["q"].get<std::string>() << ", s = " << out["s"].dump()
              << ", sbar = " << out["sbar"].dump();
    if (out.contains("sprime"))
      std::cout << ", s' = " << out["sprime"].get<Int>();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact weight-module tensor decompositions and Green rings over "
      "Hopf-Ore extensions of abelian group algebras"};
  app.require_subcommand(1);
  Session s;

  std::string left, right, engine = "rules", module_expr;
  Int budget = 0, dim_cap = 400;
  bool tamper = false;

  CLI::App* tensor = app.add_subcommand("tensor", "decompose a tensor product");
  add_session_flags(tensor, s);
  tensor->add_option("--left", left, "left module expression")->required();
  tensor->add_option("--right", right, "right module expression")->required();
  tensor->add_option("--engine", engine, "rules|oracle|both")
      ->check(CLI::IsMember({"rules", "oracle", "both"}));

  CLI::App* green = app.add_subcommand("green", "Green ring operations");
  green->require_subcommand(1);
  CLI::App* gmul = green->add_subcommand("mul", "multiply generator polynomials");
  add_session_flags(gmul, s);
  gmul->add_option("--left", left, "left generator polynomial")->required();
  gmul->add_option("--right", right, "right generator polynomial")->required();
  CLI::App* gexpress = green->add_subcommand(
      "express", "write an indecomposable class in the ring generators");
  add_session_flags(gexpress, s);
  gexpress->add_option("--module", module_expr, "module expression")->required();
  CLI::App* grel = green->add_subcommand("relations", "run the relation suite");
  add_session_flags(grel, s);
  CLI::App* gbasis =
      green->add_subcommand("basis", "unimodularity of basis truncations");
  add_session_flags(gbasis, s);

  CLI::App* selftest =
      app.add_subcommand("selftest", "oracle/rules property suite");
  add_session_flags(selftest, s);
  selftest->add_option("--budget", budget, "cap on checked pairs (0 = all)");
  selftest->add_option("--dim-cap", dim_cap,
                       "largest tensor dimension to cross-check");
  selftest->add_flag("--tamper", tamper,
                     "corrupt one rules output to prove the harness notices");

  CLI::App* config = app.add_subcommand("config", "session configuration");
  config->require_subcommand(1);
  CLI::App* validate =
      config->add_subcommand("validate", "validate and summarize a config");
  add_session_flags(validate, s);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tensor->parsed()) return run_tensor(s, left, right, engine);
    if (green->parsed()) {
      if (gmul->parsed()) return run_green_mul(s, left, right);
      if (gexpress->parsed()) return run_green_express(s, module_expr);
      if (grel->parsed()) return run_green_relations(s);
      if (gbasis->parsed()) return run_green_basis(s);
    }
    if (selftest->parsed()) return run_selftest_cmd(s, budget, dim_cap, tamper);
    if (config->parsed() && validate->parsed()) return run_config_validate(s);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 4;
  } catch (const IncompleteEigenPool& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
