#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <hopfgreen/green_ring.hpp>
#include <hopfgreen/matrix.hpp>

namespace hopfgreen {

inline std::string to_string(const RingElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lab, c] : e) {
    Int a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << a << "*";
    os << to_string(lab);
  }
  return os.str();
}

inline std::string to_string(const GenPoly& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    Int a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (a != 1) parts.push_back(std::to_string(a));
    bool plain = m.ydeg == 0 && m.zdeg == 0 && m.xs.empty();
    if (!m.lam.is_trivial() || (plain && a == 1)) parts.push_back(to_string(m.lam));
    if (m.ydeg == 1) parts.push_back("y");
    if (m.ydeg > 1) parts.push_back("y^" + std::to_string(m.ydeg));
    if (m.zdeg == 1) parts.push_back("z");
    if (m.zdeg > 1) parts.push_back("z^" + std::to_string(m.zdeg));
    for (const auto& xf : m.xs) parts.push_back("x[" + xf.eta.to_string() + "]");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

struct RelationReport {
  std::string id;
  bool ok = false;
  std::string lhs, rhs, diff;
};

inline RelationReport compare_ring_elems(const std::string& id,
                                         const RingElem& lhs,
                                         const RingElem& rhs) {
  RelationReport rep;
  rep.id = id;
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.ok = lhs == rhs;
  if (!rep.ok) rep.diff = to_string(lhs - rhs);
  return rep;
}

/// Expand both sides and compare; the signed difference is reported on
/// failure.
inline RelationReport check_relation(const HopfParams& p, const std::string& id,
                                     const GenPoly& lhs, const GenPoly& rhs) {
  return compare_ring_elems(id, expand(p, lhs), expand(p, rhs));
}

struct RelationSuiteOptions {
  Int y_power_cap = 8;        // upper bound on m for y^m expansions
  Int nil_poly_cap = 8;       // upper bound on m for [V_m] generator polys
  Int multiple_cap = 4;       // k cap for [V_{ks}] polys and z^k structure
  Int commute_pairs = 20;
  std::uint64_t seed = 1;
  std::vector<Character> chars;  // sample characters (eps is always added)
  std::vector<CycNum> roots;     // nonzero roots used for x generators
};

namespace detail {

/// (m-2i+1)/(m-i+1) * binom(m,i); integrality is part of the statement.
inline Int ballot_coeff(Int m, Int i) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), m, i);
  mpq_class c(mpz_class(m - 2 * i + 1), mpz_class(m - i + 1));
  c *= b;
  c.canonicalize();
  if (c.get_den() != 1) throw InternalError("ballot coefficient not integral");
  mpz_class num = c.get_num();
  if (!num.fits_slong_p()) throw InternalError("ballot coefficient overflow");
  return num.get_si();
}

/// RHS of the y^s reduction: (1+chi) sum_i (-1)^i binom(s-1-i,i) chi^i
/// y^{s-1-2i} + sum_{i>=1} sum_j (-1)^j ballot(s-1,i)-style terms.
inline GenPoly y_power_s_rhs(const HopfParams& p) {
  Int s = p.s_value();
  GenPoly rhs;
  for (Int i = 0; 2 * i <= s - 1; ++i) {
    Int c = binom_ll(s - 1 - i, i);
    if (i % 2 != 0) c = -c;
    rhs += GenPoly::monomial(GenMonomial{p.chi().pow(i), s - 1 - 2 * i, 0, {}}, c);
    rhs += GenPoly::monomial(GenMonomial{p.chi().pow(i + 1), s - 1 - 2 * i, 0, {}}, c);
  }
  for (Int i = 1; 2 * i <= s - 1; ++i) {
    Int outer = ballot_coeff(s - 1, i);
    for (Int j = 0; 2 * j <= s - 2 * i - 1; ++j) {
      Int c = outer * binom_ll(s - 2 * i - 1 - j, j);
      if (j % 2 != 0) c = -c;
      rhs += GenPoly::monomial(
          GenMonomial{p.chi().pow(i + j), s - 2 * i - 2 * j, 0, {}}, c);
    }
  }
  return rhs;
}

inline std::vector<Character> with_eps(const HopfParams& p,
                                       const std::vector<Character>& chars) {
  std::vector<Character> out{p.eps()};
  for (const auto& c : chars) {
    bool seen = false;
    for (const auto& o : out)
      if (o == c) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Machine verification of every stated generator/relation identity that
/// applies to the configured case, plus the commutativity dichotomy.
inline std::vector<RelationReport> relation_suite(const HopfParams& p,
                                                  const RelationSuiteOptions& opt) {
  std::vector<RelationReport> out;
  auto chars = detail::with_eps(p, opt.chars);
  std::mt19937_64 rng(opt.seed);

  // y^m against the ballot-number multiset, m < |q|
  Int y_cap = opt.y_power_cap;
  if (p.s_finite()) y_cap = std::min<Int>(y_cap, p.s_value() - 1);
  for (Int m = 0; m <= y_cap; ++m) {
    RingElem lhs = ring_pow(p, y_class(p), m);
    RingElem rhs;
    for (Int i = 0; 2 * i <= m; ++i)
      rhs.add(make_nil(p, m + 1 - 2 * i, p.chi().pow(i)),
              detail::ballot_coeff(m, i));
    out.push_back(
        compare_ring_elems("y_power_expansion/m=" + std::to_string(m), lhs, rhs));
  }

  // generator polynomial of every [V_m(lambda)] in range
  Int m_cap = opt.nil_poly_cap;
  if (p.s_finite()) m_cap = std::min<Int>(m_cap, 2 * p.s_value());
  for (Int m = 1; m <= m_cap; ++m) {
    GenPoly pm = express_nil(p, m, p.eps());
    out.push_back(compare_ring_elems("nil_generator_poly/m=" + std::to_string(m),
                                     expand(p, pm),
                                     RingElem(make_nil(p, m, p.eps()))));
  }

  if (p.s_finite()) {
    Int s = p.s_value();
    for (Int k = 3; k <= opt.multiple_cap; ++k) {
      GenPoly pk = express_nil(p, k * s, p.eps());
      out.push_back(compare_ring_elems(
          "nil_generator_poly_multiple/k=" + std::to_string(k), expand(p, pk),
          RingElem(make_nil(p, k * s, p.eps()))));
    }

    // y^s reduction relation
    out.push_back(check_relation(p, "y_power_s_reduction", GenPoly::y(p, s),
                                 detail::y_power_s_rhs(p)));

    // z^m = [V_{ms+1}(eps)] + (nilpotent remainder of dimension <= ms)
    for (Int m = 0; m <= opt.multiple_cap; ++m) {
      RingElem zm = ring_pow(p, z_class(p), m);
      RelationReport rep;
      rep.id = "z_power_structure/m=" + std::to_string(m);
      rep.lhs = to_string(zm);
      rep.rhs = "[V_{ms+1}] + remainder in P_m";
      Label lead = make_nil(p, m * s + 1, p.eps());
      rep.ok = zm.coeff(lead) == 1;
      for (const auto& [lab, c] : zm) {
        if (lab == lead) continue;
        const auto* nil = std::get_if<NilLabel>(&lab);
        if (!nil || c < 0 || nil->t > m * s) rep.ok = false;
      }
      if (!rep.ok) rep.diff = "structure constraint violated";
      out.push_back(rep);
    }
  }

  if (p.kind() == CaseKind::III) {
    Int s = p.s_value(), sp = p.sprime(), sbar = p.sbar_value();
    std::vector<CycNum> roots = opt.roots;
    if (roots.empty()) roots.push_back(CycNum::one(p.field()));
    Int samples = 0;
    for (const auto& lam : chars) {
      CycNum la_s = lam.eval(p.a()).pow(s);
      for (const auto& theta : roots) {
        ++samples;
        std::string tag = "/sample=" + std::to_string(samples);
        RingElem xa = x_class(p, theta);
        RingElem lam_cl = char_class(p, lam);

        out.push_back(compare_ring_elems("chi_absorbs_into_x" + tag,
                                         ring_mul(p, char_class(p, p.chi()), xa),
                                         xa));
        out.push_back(compare_ring_elems("x_absorbs_chi" + tag,
                                         ring_mul(p, xa, char_class(p, p.chi())),
                                         xa));
        out.push_back(compare_ring_elems(
            "x_skew_commutation" + tag, ring_mul(p, xa, lam_cl),
            ring_mul(p, lam_cl, x_class(p, la_s * theta))));
        RingElem yx = ring_mul(p, y_class(p), xa);
        out.push_back(compare_ring_elems("y_times_x" + tag, yx, xa.scaled(2)));
        out.push_back(compare_ring_elems("x_times_y" + tag,
                                         ring_mul(p, xa, y_class(p)), yx));
        out.push_back(compare_ring_elems("z_x_commute" + tag,
                                         ring_mul(p, z_class(p), xa),
                                         ring_mul(p, xa, z_class(p))));

        // product with the opposite root: the degenerate branch
        {
          RingElem xopp = x_class(p, -theta);
          RingElem lhs = ring_mul(p, xa, xopp);
          RingElem lhs2 = ring_mul(p, xopp, xa);
          RingElem rhs;
          CycNum xipow = p.xi();
          for (Int i = 1; i <= sp - 1; ++i) {
            CycNum root = (CycNum::one(p.field()) - xipow) * theta;
            rhs += x_class(p, root).scaled(s);
            xipow = xipow * p.xi();
          }
          GenPoly tail;
          for (Int i = 0; i < sbar; ++i)
            for (Int j = 0; 2 * j <= s - 1; ++j) {
              Int c = detail::binom_ll(s - 1 - j, j);
              if (j % 2 != 0) c = -c;
              tail += GenPoly::monomial(
                  GenMonomial{p.chi().pow(i), s - 1 - 2 * j, 0, {}}, c);
            }
          rhs += expand(p, tail);
          out.push_back(
              compare_ring_elems("x_times_x_opposite" + tag, lhs, rhs));
          out.push_back(
              compare_ring_elems("x_times_x_opposite_swapped" + tag, lhs2, rhs));
        }

        // generic product x_[theta] x_[eta], [eta] != [-theta]
        for (const auto& eta : roots) {
          if ((eta.pow(sp) - (-theta).pow(sp)).is_zero()) continue;
          RingElem xb = x_class(p, eta);
          RingElem lhs = ring_mul(p, xa, xb);
          RingElem rhs;
          CycNum xipow = CycNum::one(p.field());
          for (Int i = 0; i < sp; ++i) {
            rhs += x_class(p, theta + eta * xipow).scaled(s);
            xipow = xipow * p.xi();
          }
          out.push_back(compare_ring_elems("x_times_x_generic" + tag, lhs, rhs));
          out.push_back(compare_ring_elems("x_times_x_generic_swapped" + tag,
                                           ring_mul(p, xb, xa), rhs));
        }
      }
    }

    // noncommutativity witness when some lambda(a)^sbar != 1
    for (const auto& lam : chars) {
      if (lam.eval(p.a()).pow(sbar).is_one()) continue;
      RingElem xa = x_class(p, roots.front());
      RingElem left = ring_mul(p, char_class(p, lam), xa);
      RingElem right = ring_mul(p, xa, char_class(p, lam));
      RelationReport rep;
      rep.id = "noncommutativity_witness";
      rep.lhs = to_string(left);
      rep.rhs = to_string(right);
      rep.ok = left != right;
      if (!rep.ok) rep.diff = "expected the two orders to differ";
      out.push_back(rep);
      break;
    }
  } else {
    // commutative cases: sampled pairs must commute exactly
    std::vector<Label> labels;
    for (const auto& c : chars)
      for (Int t = 1; t <= 4; ++t) labels.push_back(make_nil(p, t, c));
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (Int i = 0; i < opt.commute_pairs; ++i) {
      RingElem u(labels[pick(rng)]);
      RingElem v(labels[pick(rng)]);
      out.push_back(compare_ring_elems(
          "commutativity_sample/i=" + std::to_string(i), ring_mul(p, u, v),
          ring_mul(p, v, u)));
    }
  }

  return out;
}

struct BasisBlockReport {
  std::string family;
  Int rows = 0;
  std::string det;
  bool ok = false;
  std::string detail;
};

struct BasisReport {
  Int truncation = 0;
  std::vector<BasisBlockReport> blocks;
  bool ok = true;
};

struct BasisCheckOptions {
  Int truncation = 30;
  std::vector<Character> chars;
  std::vector<CycNum> roots;  // Case III only: roots for the x columns
};

namespace detail {

struct BasisRow {
  GenPoly poly;
  Label lead;
  std::string name;
};

inline BasisBlockReport check_block(const HopfParams& p, const std::string& family,
                                    const std::vector<BasisRow>& rows) {
  BasisBlockReport rep;
  rep.family = family;
  rep.rows = static_cast<Int>(rows.size());
  std::map<Label, std::size_t, LabelLess> lead_index;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!lead_index.emplace(rows[i].lead, i).second) {
      rep.detail = "duplicate leading class at row " + rows[i].name;
      return rep;
    }
  }
  std::vector<std::vector<mpz_class>> mat(rows.size(),
                                          std::vector<mpz_class>(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RingElem e = expand(p, rows[i].poly);
    Int lead_dim = label_dim(p, rows[i].lead);
    if (e.coeff(rows[i].lead) != 1) {
      rep.detail = "leading coefficient of " + rows[i].name + " is not 1";
      return rep;
    }
    for (const auto& [lab, c] : e) {
      if (!(lab == rows[i].lead) && label_dim(p, lab) >= lead_dim) {
        rep.detail = "row " + rows[i].name + " has a non-leading class of " +
                     "dimension >= its leading class";
        return rep;
      }
      auto it = lead_index.find(lab);
      if (it != lead_index.end()) mat[i][it->second] = c;
    }
  }
  mpz_class det = det_bareiss(std::move(mat));
  rep.det = det.get_str();
  rep.ok = det == 1 || det == -1;
  if (!rep.ok) rep.detail = "graded truncation is not unimodular";
  return rep;
}

}  // namespace detail

/// Desk-scale content of the Z-basis claims: expand every generator monomial
/// with leading class of dimension <= T over the sampled characters (and
/// roots, in case III) and verify the change-of-basis matrix on the graded
/// square truncation has determinant +-1.
inline BasisReport basis_change_check(const HopfParams& p,
                                      const BasisCheckOptions& opt) {
  BasisReport report;
  report.truncation = opt.truncation;
  auto chars = detail::with_eps(p, opt.chars);
  Int T = opt.truncation;

  std::vector<detail::BasisRow> nil_rows;
  Int ymax = p.s_finite() ? p.s_value() - 1 : T - 1;
  for (const auto& lam : chars) {
    for (Int t = 0; t <= ymax; ++t) {
      for (Int m = 0;; ++m) {
        if (m > 0 && !p.s_finite()) break;
        Int lead_dim = (p.s_finite() ? m * p.s_value() : 0) + t + 1;
        if (lead_dim > T) break;
        detail::BasisRow row;
        row.poly = GenPoly::monomial(GenMonomial{lam, t, m, {}});
        row.lead = make_nil(p, lead_dim, lam);
        row.name = to_string(GenPoly::monomial(GenMonomial{lam, t, m, {}}));
        nil_rows.push_back(std::move(row));
      }
    }
  }
  report.blocks.push_back(detail::check_block(p, "nilpotent", nil_rows));

  if (p.kind() == CaseKind::III && !opt.roots.empty()) {
    Int sbar = p.sbar_value();
    std::vector<detail::BasisRow> nn_rows;
    std::set<std::string> seen;
    for (const auto& lam : chars) {
      Character sigma = p.coset_rep(lam);
      for (const auto& eta : opt.roots) {
        for (Int m = 0; (m + 1) * sbar <= T; ++m) {
          detail::BasisRow row;
          GenMonomial mono{sigma, 0, m, {{eta.pow(p.sprime()), eta}}};
          row.poly = GenPoly::monomial(mono);
          row.lead = make_nonnil(p, m + 1, sigma, eta);
          row.name = to_string(row.poly);
          if (!seen.insert(to_string(row.lead)).second) continue;
          nn_rows.push_back(std::move(row));
        }
      }
    }
    if (!nn_rows.empty())
      report.blocks.push_back(detail::check_block(p, "non-nilpotent", nn_rows));
  }

  for (const auto& b : report.blocks) report.ok = report.ok && b.ok;
  return report;
}

}  // namespace hopfgreen
