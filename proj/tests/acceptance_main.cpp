// Acceptance suite: runs every exit criterion at its stated tolerance (all
// checks are exact) and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <hopfgreen/hopfgreen.hpp>

#include "test_configs.hpp"

using namespace hopfgreen;
using namespace testcfg;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct NamedConfig {
  std::string name;
  HopfParams params;
  std::vector<Character> chars;
  std::vector<CycNum> roots;
};

std::vector<NamedConfig> engine_configs() {
  std::vector<NamedConfig> out;
  {
    auto p = case_iii_s2();
    const CycField* f = p.field();
    CycNum one = CycNum::one(f), z8 = CycNum::root_of_unity(f, 1);
    out.push_back({"s=2 sbar=4 N=8",
                   p,
                   {p.chi(), free_char(p, {one, z8}), free_char(p, {z8, one})},
                   {one, z8}});
  }
  {
    auto p = case_iii_s3();
    const CycField* f = p.field();
    CycNum one = CycNum::one(f), z12 = CycNum::root_of_unity(f, 1);
    out.push_back({"s=3 sbar=6 N=12",
                   p,
                   {p.chi(), free_char(p, {one, z12}),
                    free_char(p, {CycNum::integer(f, 2), one})},
                   {one, z12}});
  }
  {
    auto p = case_iii_s3_sp4();
    const CycField* f = p.field();
    CycNum one = CycNum::one(f), z12 = CycNum::root_of_unity(f, 1);
    out.push_back({"s=3 sbar=12 N=12",
                   p,
                   {p.chi(), free_char(p, {one, CycNum::integer(f, 2)}),
                    free_char(p, {z12, one})},
                   {one, z12}});
  }
  {
    auto p = case_iii_coincide();
    const CycField* f = p.field();
    CycNum one = CycNum::one(f), two = CycNum::integer(f, 2);
    out.push_back({"s=sbar=3 N=3",
                   p,
                   {p.chi(), free_char(p, {one, two}), free_char(p, {two, one})},
                   {one, two, CycNum::root_of_unity(f, 1)}});
  }
  {
    auto p = case_ii();
    const CycField* f = p.field();
    CycNum one = CycNum::one(f), z12 = CycNum::root_of_unity(f, 1);
    out.push_back({"|chi|=inf s=3",
                   p,
                   {p.chi(), free_char(p, {one, z12}),
                    free_char(p, {CycNum::integer(f, 3), one})},
                   {}});
  }
  return out;
}

// ---------------------------------------------------------------- 1 and 6
void criteria_engine_equivalence() {
  Int pairs = 0, mismatches = 0, roundtrips = 0, rt_fail = 0;
  Int additivity = 0, add_fail = 0, slices = 0, slice_fail = 0;
  bool coverage = true, ok = true;
  std::ostringstream detail;
  for (const auto& cfg : engine_configs()) {
    SelftestOptions opt;
    opt.seed = 2024;
    opt.dim_cap = 400;
    opt.chars = cfg.chars;
    opt.roots = cfg.roots;
    opt.extra_nil_t = {16, 20};
    opt.additivity_checks = 50;
    opt.slice_checks = 50;
    SelftestReport rep = run_selftest(cfg.params, opt);
    pairs += rep.pairs_checked;
    mismatches += rep.mismatches;
    roundtrips += rep.roundtrips;
    rt_fail += rep.roundtrip_failures;
    additivity += rep.additivity_checks;
    add_fail += rep.additivity_failures;
    slices += rep.slice_checks;
    slice_fail += rep.slice_failures;
    if (cfg.params.s_finite()) coverage = coverage && rep.nil_branch_coverage;
    if (!rep.ok()) {
      ok = false;
      detail << cfg.name << ": " << (rep.failures.empty() ? "failed" : rep.failures.front())
             << "; ";
    }

    // degenerate branch forced at every grid position: eta = -theta
    // lam(a)^s xi^j moves j0 but never the decomposition
    const HopfParams& p = cfg.params;
    if (p.kind() == CaseKind::III) {
      CycNum theta = cfg.roots.front();
      const Character& lam = cfg.chars.front();
      CycNum base = -(theta * lam.eval(p.a()).pow(p.s_value()));
      auto left = std::get<NonNilLabel>(make_nonnil(p, 1, p.eps(), theta));
      Decomposition first;
      std::set<Int> j0_seen;
      for (Int j = 0; j < p.sprime(); ++j) {
        NonNilLabel right{1, p.coset_rep(lam), base.pow(p.sprime()),
                          base * p.xi().pow(j)};
        RuleResult res = tensor_nonnil_nonnil(p, left, right);
        if (res.trace.rule_id != "nonnil-nonnil/degenerate") ok = false;
        for (const auto& [k, v] : res.trace.branch)
          if (k == "j0") j0_seen.insert(v);
        if (j == 0) {
          first = res.decomp;
          MatrixRep rep_ab = tensor_rep(p, build_label(p, Label{left}),
                                        build_label(p, Label{right}));
          EigenPool pool;
          pool.add_labels(res.decomp);
          pool.add(left.beta, left.eta);
          pool.add(right.beta, right.eta);
          if (!(oracle_decompose(p, rep_ab, pool) == res.decomp)) {
            ok = false;
            detail << cfg.name << ": degenerate product disagrees with oracle; ";
          }
          ++pairs;
        } else if (!(res.decomp == first)) {
          ok = false;
          detail << cfg.name << ": carried-root choice changed a product; ";
        }
      }
      if (static_cast<Int>(j0_seen.size()) != p.sprime()) {
        ok = false;
        detail << cfg.name << ": not every zero position was forced; ";
      }
    }
  }
  {
    std::ostringstream d;
    d << pairs << " label pairs across 5 configs, " << mismatches
      << " mismatches, branch coverage "
      << (coverage ? "complete" : "INCOMPLETE");
    report(1, "closed-form and oracle decompositions agree as exact multisets",
           ok && mismatches == 0 && coverage, d.str());
  }
  {
    std::ostringstream d;
    d << roundtrips << " round-trips (" << rt_fail << " failed), " << additivity
      << " direct-sum additivity checks (" << add_fail << " failed), " << slices
      << " coset-slice consistency checks (" << slice_fail << " failed)";
    report(6, "oracle self-consistency",
           rt_fail == 0 && add_fail == 0 && slice_fail == 0 && additivity >= 50 &&
               slices >= 50,
           d.str());
  }
}

// --------------------------------------------------------------------- 2
void criterion_named_instances() {
  bool ok = true;
  std::ostringstream detail;

  {  // ladder instance at s = 2, t = 2
    auto p = case_iii_s2();
    const CycField* f = p.field();
    Character lam = free_char(p, {CycNum::root_of_unity(f, 1), CycNum::one(f)});
    Character sig = free_char(p, {CycNum::one(f), CycNum::root_of_unity(f, 1)});
    Decomposition expect;
    expect.add(make_nil(p, 4, lam * sig), 1);
    expect.add(make_nil(p, 2, p.chi() * lam * sig), 1);
    if (!(tensor_nil_nil(p, 3, lam, 2, sig).decomp == expect)) {
      ok = false;
      detail << "V3xV2 ladder instance failed; ";
    }
  }
  {  // V_{2s} against a non-nil module, t = 1..4
    auto p = case_iii_s3();
    Int s = p.s_value();
    CycNum eta = CycNum::root_of_unity(p.field(), 1);
    for (Int t = 1; t <= 4; ++t) {
      auto lab = std::get<NonNilLabel>(make_nonnil(p, t, p.eps(), eta));
      Decomposition expect;
      if (t > 1) expect.add(make_nonnil(p, t - 1, p.eps(), eta), s);
      expect.add(make_nonnil(p, t + 1, p.eps(), eta), s);
      if (!(tensor_nil_nonnil(p, 2 * s, p.eps(), lab, Side::Left).decomp ==
            expect)) {
        ok = false;
        detail << "V_{2s} x W_" << t << " failed; ";
      }
    }
  }
  {  // degenerate product of two non-nil modules: the nilpotent block is
     // exactly one V_s(chi^j sigma lam) for every j
    auto p = case_iii_s3();
    const CycField* f = p.field();
    Character lam = free_char(p, {CycNum::one(f), CycNum::root_of_unity(f, 1)});
    CycNum theta = CycNum::one(f);
    CycNum eta = -(theta * lam.eval(p.a()).pow(p.s_value()));
    auto a = std::get<NonNilLabel>(make_nonnil(p, 1, p.eps(), theta));
    auto b = std::get<NonNilLabel>(make_nonnil(p, 1, lam, eta));
    Decomposition got = tensor_nonnil_nonnil(p, a, b).decomp;
    bool block_ok = true;
    for (Int j = 0; j < p.sbar_value(); ++j)
      block_ok = block_ok &&
                 got.multiplicity(make_nil(p, p.s_value(), p.chi().pow(j) * lam)) == 1;
    Int nil_mass = 0;
    for (const auto& [labx, mult] : got)
      if (std::holds_alternative<NilLabel>(labx))
        nil_mass += mult * label_dim(p, labx);
    block_ok = block_ok && nil_mass == p.sbar_value() * p.s_value();
    if (!block_ok) {
      ok = false;
      detail << "degenerate nil block wrong; ";
    }
  }
  report(2, "named decomposition instances", ok,
         ok ? "ladder, V_{2s} ladder t=1..4, degenerate block all exact"
            : detail.str());
}

// --------------------------------------------------------------------- 3
void criterion_relations() {
  bool ok = true;
  Int total = 0, failed = 0, opposite = 0, generic = 0;
  std::ostringstream detail;

  auto run = [&](const std::string& name, const HopfParams& p,
                 RelationSuiteOptions opt) {
    auto reports = relation_suite(p, opt);
    for (const auto& r : reports) {
      ++total;
      if (!r.ok) {
        ++failed;
        ok = false;
        if (failed <= 4) detail << name << "/" << r.id << "; ";
      }
      if (r.id.starts_with("x_times_x_opposite")) ++opposite;
      if (r.id.starts_with("x_times_x_generic")) ++generic;
    }
  };

  {
    auto p = case_i();
    RelationSuiteOptions opt;
    opt.y_power_cap = 8;
    opt.nil_poly_cap = 8;
    opt.chars = {p.chi(), free_char(p, {CycNum::integer(p.field(), 3)})};
    run("q-infinite", p, opt);
  }
  {
    auto p = case_ii();
    RelationSuiteOptions opt;
    opt.y_power_cap = 8;
    opt.nil_poly_cap = 8;
    opt.multiple_cap = 4;
    opt.chars = {p.chi(), free_char(p, {CycNum::one(p.field()),
                                        CycNum::root_of_unity(p.field(), 1)})};
    run("chi-infinite", p, opt);
  }
  for (const auto& cfg : engine_configs()) {
    if (cfg.params.kind() != CaseKind::III) continue;
    RelationSuiteOptions opt;
    opt.y_power_cap = 8;
    opt.nil_poly_cap = 8;
    opt.multiple_cap = 4;
    opt.chars = cfg.chars;
    opt.roots = cfg.roots;
    run(cfg.name, cfg.params, opt);
  }

  std::ostringstream d;
  d << total << " relation checks, " << failed << " failed; " << opposite
    << " opposite-root and " << generic << " generic product samples";
  report(3, "Green ring relation identities", ok && opposite >= 10 && generic >= 10,
         d.str());
}

// --------------------------------------------------------------------- 4
void criterion_basis() {
  bool ok = true;
  std::ostringstream detail;
  auto run = [&](const std::string& name, const HopfParams& p,
                 BasisCheckOptions opt) {
    opt.truncation = 30;
    BasisReport rep = basis_change_check(p, opt);
    for (const auto& b : rep.blocks)
      detail << name << "/" << b.family << ": " << b.rows
             << " rows det=" << b.det << "; ";
    ok = ok && rep.ok;
  };

  {
    auto p = case_i();
    BasisCheckOptions opt;
    opt.chars = {p.chi(), free_char(p, {CycNum::integer(p.field(), 3)})};
    run("q-infinite", p, opt);
  }
  {
    auto p = case_ii();
    BasisCheckOptions opt;
    opt.chars = {p.chi(), free_char(p, {CycNum::one(p.field()),
                                        CycNum::root_of_unity(p.field(), 1)})};
    run("chi-infinite", p, opt);
  }
  {
    auto p = case_iii_s3();
    const CycField* f = p.field();
    BasisCheckOptions opt;
    opt.chars = {p.chi(), free_char(p, {CycNum::one(f), CycNum::root_of_unity(f, 1)})};
    opt.roots = {CycNum::one(f), CycNum::root_of_unity(f, 1)};
    run("chi-finite", p, opt);
  }
  report(4, "change-of-basis truncations up to dimension 30 are unimodular", ok,
         detail.str());
}

// --------------------------------------------------------------------- 5
void criterion_commutativity() {
  bool ok = true;
  std::ostringstream detail;

  for (auto& [name, p] :
       std::vector<std::pair<std::string, HopfParams>>{{"q-infinite", case_i()},
                                                       {"chi-infinite", case_ii()}}) {
    RelationSuiteOptions opt;
    opt.commute_pairs = 100;
    opt.y_power_cap = 0;
    opt.nil_poly_cap = 0;
    opt.multiple_cap = -1;
    opt.chars = {p.chi()};
    Int samples = 0, failures = 0;
    for (const auto& r : relation_suite(p, opt)) {
      if (r.id.starts_with("commutativity_sample")) {
        ++samples;
        if (!r.ok) ++failures;
      }
    }
    detail << name << ": " << samples << " commuting pairs, " << failures
           << " failed; ";
    ok = ok && samples == 100 && failures == 0;
  }

  {  // the finite-chi witness: lam x_beta != x_beta lam when lam(a)^sbar != 1,
     // confirmed by closed forms and by the matrix oracle
    auto p = case_iii_z24();
    Character lam = torsion_char(p, {1});
    CycNum la_sbar = lam.eval(p.a()).pow(p.sbar_value());
    bool witness_ok = !la_sbar.is_one();

    CycNum eta = CycNum::one(p.field());
    Label xlab = make_nonnil(p, 1, p.eps(), eta);
    Label llab = make_nil(p, 1, lam);
    RuleResult left = tensor_labels(p, llab, xlab);
    RuleResult right = tensor_labels(p, xlab, llab);
    witness_ok = witness_ok && !(left.decomp == right.decomp);

    for (auto [a, b, expect] : {std::tuple{llab, xlab, &left},
                                std::tuple{xlab, llab, &right}}) {
      EigenPool pool;
      pool.add_labels(expect->decomp);
      Decomposition oracle = oracle_decompose(
          p, tensor_rep(p, build_label(p, a), build_label(p, b)), pool);
      witness_ok = witness_ok && oracle == expect->decomp;
    }
    detail << "Z/24 witness: orders differ and both engines agree";
    ok = ok && witness_ok;
  }

  report(5, "commutativity dichotomy", ok, detail.str());
}

}  // namespace

int main() {
  try {
    criteria_engine_equivalence();
    criterion_named_instances();
    criterion_relations();
    criterion_basis();
    criterion_commutativity();
  } catch (const Error& e) {
    std::printf("[FAIL] unexpected error: %s\n", e.what());
    return 1;
  }
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
