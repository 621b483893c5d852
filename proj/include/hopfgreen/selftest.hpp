#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <hopfgreen/green_suite.hpp>
#include <hopfgreen/oracle.hpp>

namespace hopfgreen {

struct SelftestOptions {
  std::uint64_t seed = 1;
  Int dim_cap = 400;        // pairs are checked when dim(A)*dim(B) <= cap
  Int nil_tmax = 0;         // 0 = derive from s (covers every branch shape)
  Int nonnil_tmax = 0;      // 0 = derive from sbar and the cap
  std::vector<Int> extra_nil_t;  // extra large nilpotent sizes (first two chars)
  Int additivity_checks = 50;
  Int slice_checks = 50;
  Int pair_budget = 0;      // 0 = all pairs within the cap
  bool tamper = false;      // test hook: corrupt one rules output on purpose
  std::vector<Character> chars;
  std::vector<CycNum> roots;
};

struct SelftestReport {
  Int labels = 0;
  Int pairs_checked = 0;
  Int mismatches = 0;
  Int roundtrips = 0;
  Int roundtrip_failures = 0;
  Int additivity_checks = 0;
  Int additivity_failures = 0;
  Int slice_checks = 0;
  Int slice_failures = 0;
  // coverage of the four nil-nil branch shapes: (l+l' <= s) x (l <= l')
  std::array<bool, 4> nil_branches{};
  bool nil_branch_coverage = true;
  std::vector<std::string> failures;

  bool ok() const {
    return mismatches == 0 && roundtrip_failures == 0 &&
           additivity_failures == 0 && slice_failures == 0 &&
           nil_branch_coverage;
  }
};

/// Envelope of labels a config is tested over: nilpotent classes for every
/// sample character with t large enough to hit every branch shape, and (in
/// case III) non-nilpotent classes for every sampled root, plus roots that
/// force the degenerate product branch.
inline std::vector<Label> test_envelope(const HopfParams& p,
                                        const SelftestOptions& opt) {
  std::vector<Character> chars{p.eps()};
  for (const auto& c : opt.chars) {
    bool seen = false;
    for (const auto& o : chars) seen = seen || o == c;
    if (!seen) chars.push_back(c);
  }

  Int tmax = opt.nil_tmax;
  if (tmax == 0) tmax = p.s_finite() ? 2 * p.s_value() + 3 : 8;
  std::vector<Label> labels;
  for (const auto& c : chars)
    for (Int t = 1; t <= tmax; ++t) labels.push_back(make_nil(p, t, c));
  for (std::size_t ci = 0; ci < chars.size() && ci < 2; ++ci)
    for (Int t : opt.extra_nil_t)
      if (t > tmax) labels.push_back(make_nil(p, t, chars[ci]));

  if (p.kind() == CaseKind::III) {
    Int sbar = p.sbar_value();
    Int nnmax = opt.nonnil_tmax;
    if (nnmax == 0)
      nnmax = std::min<Int>(2, std::max<Int>(1, opt.dim_cap / (sbar * sbar)));
    std::vector<CycNum> roots = opt.roots;
    if (roots.empty()) roots.push_back(CycNum::one(p.field()));
    // roots forcing alpha_{j0} = 0 against the first root, for the first two
    // sample characters
    std::vector<CycNum> all_roots = roots;
    for (std::size_t ci = 0; ci < chars.size() && ci < 2; ++ci) {
      CycNum las = chars[ci].eval(p.a()).pow(p.s_value());
      CycNum forced = -(roots.front() * las);
      for (Int j = 0; j < p.sprime(); ++j) {
        all_roots.push_back(forced);
        forced = forced * p.xi();
      }
    }
    for (const auto& c : chars)
      for (const auto& r : all_roots)
        for (Int t = 1; t <= nnmax; ++t) {
          Label lab = make_nonnil(p, t, c, r);
          bool seen = false;
          for (const auto& o : labels) seen = seen || o == lab;
          if (!seen) labels.push_back(lab);
        }
  }
  return labels;
}

namespace detail {

inline void record_branch(SelftestReport& rep, const RuleTrace& trace) {
  if (trace.rule_id != "nil-nil/general") return;
  Int l = 0, lp = 0, le = 1;
  for (const auto& [k, v] : trace.branch) {
    if (k == "l") l = v;
    if (k == "lprime") lp = v;
    if (k == "sum_le_s") le = v;
  }
  if (l <= lp) rep.nil_branches[le ? 0 : 2] = true;
  if (l >= lp) rep.nil_branches[le ? 1 : 3] = true;
}

inline EigenPool pool_for(const HopfParams& p, const Decomposition& rules_out,
                          const Label& a, const Label& b) {
  EigenPool pool;
  pool.add_labels(rules_out);
  pool.add_labels(Decomposition(a));
  pool.add_labels(Decomposition(b));
  return pool;
}

}  // namespace detail

/// Oracle-vs-rules equivalence over the envelope, round-trips, additivity of
/// the oracle on direct sums, and Jordan-data consistency across the slices
/// of a coset. Deterministic for a fixed seed.
inline SelftestReport run_selftest(const HopfParams& p,
                                   const SelftestOptions& opt) {
  SelftestReport rep;
  std::mt19937_64 rng(opt.seed);
  std::vector<Label> labels = test_envelope(p, opt);
  rep.labels = static_cast<Int>(labels.size());

  // round-trips
  for (const auto& lab : labels) {
    ++rep.roundtrips;
    EigenPool pool;
    pool.add_labels(Decomposition(lab));
    Decomposition got = oracle_decompose(p, build_label(p, lab), pool);
    if (!(got == Decomposition(lab))) {
      ++rep.roundtrip_failures;
      rep.failures.push_back("round-trip failed for " + to_string(lab));
    }
  }

  // engine equivalence on all pairs within the dimension cap
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (label_dim(p, labels[i]) * label_dim(p, labels[j]) <= opt.dim_cap)
        pairs.emplace_back(i, j);
  if (opt.pair_budget > 0 && static_cast<Int>(pairs.size()) > opt.pair_budget) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(opt.pair_budget);
  }
  bool tampered = false;
  for (const auto& [i, j] : pairs) {
    const Label& a = labels[i];
    const Label& b = labels[j];
    RuleResult rules = tensor_labels(p, a, b);
    detail::record_branch(rep, rules.trace);
    if (opt.tamper && !tampered) {
      rules.decomp.add(rules.decomp.begin()->first, 1);
      tampered = true;
    }
    MatrixRep rep_ab = tensor_rep(p, build_label(p, a), build_label(p, b));
    Decomposition oracle =
        oracle_decompose(p, rep_ab, detail::pool_for(p, rules.decomp, a, b));
    ++rep.pairs_checked;
    if (!(oracle == rules.decomp)) {
      ++rep.mismatches;
      if (rep.failures.size() < 32)
        rep.failures.push_back("engines disagree on " + to_string(a) + " (x) " +
                               to_string(b) + ": rules " +
                               to_string(rules.decomp) + " vs oracle " +
                               to_string(oracle));
    }
  }
  if (p.s_finite()) {
    // l + l' > s needs 2(s-1) >= s+1, i.e. s >= 3
    bool overflow_reachable = p.s_value() >= 3;
    rep.nil_branch_coverage = rep.nil_branches[0] && rep.nil_branches[1] &&
                              (!overflow_reachable ||
                               (rep.nil_branches[2] && rep.nil_branches[3]));
    if (!rep.nil_branch_coverage)
      rep.failures.push_back("not every nil-nil branch shape was exercised");
  }

  // additivity of the oracle on block-diagonal sums
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (Int k = 0; k < opt.additivity_checks; ++k) {
    const Label& a = labels[pick(rng)];
    const Label& b = labels[pick(rng)];
    if (label_dim(p, a) + label_dim(p, b) > opt.dim_cap) continue;
    ++rep.additivity_checks;
    Decomposition expect;
    expect.add(a, 1);
    expect.add(b, 1);
    EigenPool pool;
    pool.add_labels(expect);
    MatrixRep sum = direct_sum(p, build_label(p, a), build_label(p, b));
    Decomposition got = oracle_decompose(p, sum, pool);
    if (!(got == expect)) {
      ++rep.additivity_failures;
      rep.failures.push_back("oracle not additive on " + to_string(a) + " (+) " +
                             to_string(b));
    }
  }

  // Jordan data must agree on every slice of a coset, not just the canonical
  // representative slice
  if (p.kind() == CaseKind::III) {
    std::vector<Label> nonnil;
    for (const auto& lab : labels)
      if (std::holds_alternative<NonNilLabel>(lab)) nonnil.push_back(lab);
    if (!nonnil.empty()) {
      std::uniform_int_distribution<std::size_t> pick_nn(0, nonnil.size() - 1);
      std::uniform_int_distribution<Int> pick_j(1, p.sbar_value() - 1);
      for (Int k = 0; k < opt.slice_checks; ++k) {
        const Label& a = nonnil[pick_nn(rng)];
        const Label& b = nonnil[pick_nn(rng)];
        if (label_dim(p, a) * label_dim(p, b) > opt.dim_cap) continue;
        ++rep.slice_checks;
        RuleResult rules = tensor_labels(p, a, b);
        MatrixRep rep_ab = tensor_rep(p, build_label(p, a), build_label(p, b));
        FittingSplit fit = fitting_split(p, rep_ab);
        if (fit.inv_dim == 0) continue;
        EigenPool pool = detail::pool_for(p, rules.decomp, a, b);
        const Character& some_weight = fit.inv_basis.begin()->first;
        Character canonical = p.coset_rep(some_weight);
        Character other = canonical;
        Int shift = pick_j(rng);
        for (Int s = 0; s < shift; ++s) other = p.chi() * other;
        auto t1 = invertible_jordan_table(p, fit, canonical, pool);
        auto t2 = invertible_jordan_table(p, fit, other, pool);
        bool same = t1.size() == t2.size();
        if (same) {
          auto it1 = t1.begin();
          auto it2 = t2.begin();
          for (; it1 != t1.end(); ++it1, ++it2) {
            auto s1 = it1->second, s2 = it2->second;
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            same = same && !(it1->first != it2->first) && s1 == s2;
          }
        }
        if (!same) {
          ++rep.slice_failures;
          rep.failures.push_back("slice Jordan data differs across the coset on " +
                                 to_string(a) + " (x) " + to_string(b));
        }
      }
    }
  }
  return rep;
}

inline std::string summary(const SelftestReport& r) {
  std::ostringstream os;
  os << "labels=" << r.labels << " pairs=" << r.pairs_checked
     << " mismatches=" << r.mismatches << " roundtrips=" << r.roundtrips
     << " roundtrip_failures=" << r.roundtrip_failures
     << " additivity=" << r.additivity_checks << "/"
     << r.additivity_failures << " slices=" << r.slice_checks << "/"
     << r.slice_failures
     << " branch_coverage=" << (r.nil_branch_coverage ? "full" : "INCOMPLETE");
  return os.str();
}

}  // namespace hopfgreen
