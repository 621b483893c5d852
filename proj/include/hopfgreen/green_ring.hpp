#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <hopfgreen/qcombinatorics.hpp>
#include <hopfgreen/tensor_rules.hpp>

namespace hopfgreen {

/// Element of the Green ring r(W) in the indecomposable-class Z-basis:
/// finitely supported signed multiplicities (virtual modules allowed).
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(const Label& lab, Int c = 1) { add(lab, c); }
  static RingElem from(const Decomposition& d) {
    RingElem e;
    for (const auto& [lab, m] : d) e.add(lab, m);
    return e;
  }
  static RingElem unit(const HopfParams& p) {
    return RingElem(make_nil(p, 1, p.eps()));
  }

  void add(const Label& lab, Int c) {
    if (c == 0) return;
    Int& m = terms_[lab];
    m += c;
    if (m == 0) terms_.erase(lab);
  }

  RingElem& operator+=(const RingElem& o) {
    for (const auto& [lab, c] : o.terms_) add(lab, c);
    return *this;
  }
  RingElem& operator-=(const RingElem& o) {
    for (const auto& [lab, c] : o.terms_) add(lab, -c);
    return *this;
  }
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  RingElem scaled(Int k) const {
    RingElem e;
    if (k == 0) return e;
    for (const auto& [lab, c] : terms_) e.terms_[lab] = c * k;
    return e;
  }

  Int coeff(const Label& lab) const {
    auto it = terms_.find(lab);
    return it == terms_.end() ? 0 : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  const LabelMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) {
    return !(a == b);
  }

  /// Only meaningful for actual modules (nonnegative coefficients).
  Decomposition to_decomposition() const {
    Decomposition d;
    for (const auto& [lab, c] : terms_) d.add(lab, c);
    return d;
  }

 private:
  LabelMap terms_;
};

/// [U][V] = [U (x) V], extended bilinearly over signed coefficients.
inline RingElem ring_mul(const HopfParams& p, const RingElem& a,
                         const RingElem& b) {
  RingElem out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      RuleResult r = tensor_labels(p, la, lb);
      for (const auto& [lab, m] : r.decomp) out.add(lab, m * ca * cb);
    }
  return out;
}

inline RingElem ring_pow(const HopfParams& p, const RingElem& a, Int e) {
  RingElem acc = RingElem::unit(p);
  for (Int i = 0; i < e; ++i) acc = ring_mul(p, acc, a);
  return acc;
}

/// Classes of the ring generators.
inline RingElem char_class(const HopfParams& p, const Character& lam) {
  return RingElem(make_nil(p, 1, lam));
}
inline RingElem y_class(const HopfParams& p) {
  return RingElem(make_nil(p, 2, p.eps()));
}
inline RingElem z_class(const HopfParams& p) {
  return RingElem(make_nil(p, p.s_value() + 1, p.eps()));
}
inline RingElem x_class(const HopfParams& p, const CycNum& eta) {
  return RingElem(make_nonnil(p, 1, p.eps(), eta));
}

/// One x_beta factor of a generator monomial; beta = eta^{s'} with the root
/// carried so twisted indices stay exactly rooted.
struct XFactor {
  CycNum beta;
  CycNum eta;
};

/// Monomial lam * y^ydeg * z^zdeg * x_{b_1} ... x_{b_k} in the fixed
/// character-first normal form of the skew group ring Z[X]#G^: y, z and the
/// x's commute with each other, characters move past x's by twisting
/// beta -> lam(a)^sbar beta. Identity of a monomial ignores the carried
/// roots (x_beta is indexed by beta alone).
struct GenMonomial {
  Character lam;
  Int ydeg = 0;
  Int zdeg = 0;
  std::vector<XFactor> xs;
};

inline int compare(const GenMonomial& a, const GenMonomial& b) {
  int c = compare(a.lam, b.lam);
  if (c != 0) return c;
  if (a.ydeg != b.ydeg) return a.ydeg < b.ydeg ? -1 : 1;
  if (a.zdeg != b.zdeg) return a.zdeg < b.zdeg ? -1 : 1;
  if (a.xs.size() != b.xs.size()) return a.xs.size() < b.xs.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.xs.size(); ++i) {
    c = compare(a.xs[i].beta, b.xs[i].beta);
    if (c != 0) return c;
  }
  return 0;
}

struct GenMonomialLess {
  bool operator()(const GenMonomial& a, const GenMonomial& b) const {
    return compare(a, b) < 0;
  }
};

/// Integer combination of generator monomials. Formally an element of
/// Z[X]#G^ (cases I/II restrict the alphabet to lam,y resp. lam,y,z);
/// expand() maps it into r(W).
class GenPoly {
 public:
  GenPoly() = default;

  static GenPoly monomial(GenMonomial m, Int c = 1) {
    std::sort(m.xs.begin(), m.xs.end(), [](const XFactor& a, const XFactor& b) {
      return compare(a.beta, b.beta) < 0;
    });
    GenPoly g;
    if (c != 0) g.terms_.emplace(std::move(m), c);
    return g;
  }
  static GenPoly character(const HopfParams& p, const Character& lam, Int c = 1) {
    return monomial(GenMonomial{lam, 0, 0, {}}, c);
  }
  static GenPoly constant(const HopfParams& p, Int c) {
    return character(p, p.eps(), c);
  }
  static GenPoly y(const HopfParams& p, Int deg = 1) {
    return monomial(GenMonomial{p.eps(), deg, 0, {}});
  }
  static GenPoly z(const HopfParams& p, Int deg = 1) {
    return monomial(GenMonomial{p.eps(), 0, deg, {}});
  }
  static GenPoly x(const HopfParams& p, const CycNum& eta) {
    if (eta.is_zero()) throw InvalidArgument("x generators need eta != 0");
    return monomial(GenMonomial{p.eps(), 0, 0, {{eta.pow(p.sprime()), eta}}});
  }

  void add_term(GenMonomial m, Int c) {
    if (c == 0) return;
    std::sort(m.xs.begin(), m.xs.end(), [](const XFactor& a, const XFactor& b) {
      return compare(a.beta, b.beta) < 0;
    });
    accumulate(m, c);
  }

  GenPoly& operator+=(const GenPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  GenPoly& operator-=(const GenPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  GenPoly scaled(Int k) const {
    GenPoly g;
    if (k == 0) return g;
    for (const auto& [m, c] : terms_) g.terms_.emplace(m, c * k);
    return g;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<GenMonomial, Int, GenMonomialLess>& terms() const {
    return terms_;
  }

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    GenPoly d = a;
    d -= b;
    return d.is_zero();
  }

 private:
  void accumulate(const GenMonomial& m, Int c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<GenMonomial, Int, GenMonomialLess> terms_;
};

/// Skew product: (lam1 r1)(lam2 r2) = (lam1 lam2)(r1^{lam2} r2) where the
/// twist sends x_beta to x_{lam(a)^sbar beta} (root: eta -> lam(a)^s eta)
/// and fixes y, z.
inline GenPoly genpoly_mul(const HopfParams& p, const GenPoly& a,
                           const GenPoly& b) {
  GenPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      GenMonomial m;
      m.lam = ma.lam * mb.lam;
      m.ydeg = ma.ydeg + mb.ydeg;
      m.zdeg = ma.zdeg + mb.zdeg;
      m.xs.reserve(ma.xs.size() + mb.xs.size());
      if (!ma.xs.empty()) {
        CycNum twist = mb.lam.eval(p.a()).pow(p.s_value());
        for (const auto& xf : ma.xs)
          m.xs.push_back({xf.beta * twist.pow(p.sprime()), xf.eta * twist});
      }
      m.xs.insert(m.xs.end(), mb.xs.begin(), mb.xs.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

inline GenPoly genpoly_pow(const HopfParams& p, const GenPoly& a, Int e) {
  GenPoly acc = GenPoly::constant(p, 1);
  for (Int i = 0; i < e; ++i) acc = genpoly_mul(p, acc, a);
  return acc;
}

/// Substitute the generator classes and multiply out in r(W), evaluating
/// each monomial left to right in the stored normal form.
inline RingElem expand(const HopfParams& p, const GenPoly& gp) {
  RingElem out;
  for (const auto& [m, c] : gp.terms()) {
    if (m.zdeg > 0 && !p.s_finite())
      throw UnsupportedCase("z is not a generator when |q| is infinite");
    if (!m.xs.empty() && p.kind() != CaseKind::III)
      throw UnsupportedCase("x generators exist only when |chi| is finite");
    RingElem e = char_class(p, m.lam);
    for (Int i = 0; i < m.ydeg; ++i) e = ring_mul(p, e, y_class(p));
    for (Int i = 0; i < m.zdeg; ++i) e = ring_mul(p, e, z_class(p));
    for (const auto& xf : m.xs) e = ring_mul(p, e, x_class(p, xf.eta));
    out += e.scaled(c);
  }
  return out;
}

namespace detail {

inline Int binom_ll(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (!b.fits_slong_p()) throw InternalError("binomial overflow");
  return b.get_si();
}

/// sum_{i=0}^{[(m-1)/2]} (-1)^i binom(m-1-i, i) chi^i y^{m-1-2i}, the
/// generator polynomial of [V_m(eps)] valid for m <= s (and for every m when
/// |q| is infinite).
inline GenPoly nil_eps_small(const HopfParams& p, Int m) {
  GenPoly out;
  for (Int i = 0; 2 * i <= m - 1; ++i) {
    Int c = binom_ll(m - 1 - i, i);
    if (i % 2 != 0) c = -c;
    out += GenPoly::monomial(GenMonomial{p.chi().pow(i), m - 1 - 2 * i, 0, {}}, c);
  }
  return out;
}

inline GenPoly scale_by_character(const HopfParams& p, const GenPoly& g,
                                  const Character& lam) {
  return genpoly_mul(p, GenPoly::character(p, lam), g);
}

inline GenPoly express_nil_eps(const HopfParams& p, Int m,
                               std::map<Int, GenPoly>& memo);

inline GenPoly express_nil_impl(const HopfParams& p, Int m, const Character& lam,
                                std::map<Int, GenPoly>& memo) {
  return scale_by_character(p, express_nil_eps(p, m, memo), lam);
}

inline GenPoly express_nil_eps(const HopfParams& p, Int m,
                               std::map<Int, GenPoly>& memo) {
  auto hit = memo.find(m);
  if (hit != memo.end()) return hit->second;
  GenPoly out;
  if (!p.s_finite()) {
    out = nil_eps_small(p, m);
  } else {
    Int s = p.s_value();
    if (m <= s) {
      out = nil_eps_small(p, m);
    } else if (m == s + 1) {
      out = GenPoly::z(p);
    } else if (m <= 2 * s) {
      Int mm = m - s;
      GenPoly ps = express_nil_eps(p, s, memo);
      for (Int i = 0; 2 * i <= mm - 1; ++i) {
        Int c = binom_ll(mm - 1 - i, i);
        if (i % 2 != 0) c = -c;
        out += GenPoly::monomial(
            GenMonomial{p.chi().pow(i), mm - 1 - 2 * i, 1, {}}, c);
      }
      for (Int i = 0; 2 * i <= mm - 2; ++i) {
        Int c = binom_ll(mm - 2 - i, i);
        if (i % 2 != 0) c = -c;
        GenPoly term = genpoly_mul(
            p,
            GenPoly::monomial(GenMonomial{p.chi().pow(i + 1), mm - 2 - 2 * i, 0, {}}),
            ps);
        out -= term.scaled(c);
      }
    } else if (m % s == 0) {
      // [V_{ks}] as a polynomial in w = z - sum_{j=1}^{s-1} chi^j applied to
      // [V_{2s}] and [V_s]
      Int k = m / s;
      GenPoly w = GenPoly::z(p);
      for (Int j = 1; j <= s - 1; ++j)
        w -= GenPoly::character(p, p.chi().pow(j));
      GenPoly p_s = express_nil_eps(p, s, memo);
      GenPoly p_2s = express_nil_eps(p, 2 * s, memo);
      for (Int i = 0; 2 * i <= k - 2; ++i) {
        Int c = binom_ll(k - 2 - i, i);
        if (i % 2 != 0) c = -c;
        GenPoly term = genpoly_mul(
            p, GenPoly::character(p, p.chi().pow(s * i)),
            genpoly_mul(p, genpoly_pow(p, w, k - 2 - 2 * i), p_2s));
        out += term.scaled(c);
      }
      for (Int i = 0; 2 * i <= k - 3; ++i) {
        Int c = binom_ll(k - 3 - i, i);
        if (i % 2 != 0) c = -c;
        GenPoly term = genpoly_mul(
            p, GenPoly::character(p, p.chi().pow(s * (i + 1))),
            genpoly_mul(p, genpoly_pow(p, w, k - 3 - 2 * i), p_s));
        out -= term.scaled(c);
      }
    } else {
      // eliminate through z [V_{m-s}] = [V_{s+1} (x) V_{m-s}]; every other
      // summand of the product has smaller dimension
      RuleResult prod = tensor_nil_nil(p, s + 1, p.eps(), m - s, p.eps());
      Label want = make_nil(p, m, p.eps());
      if (prod.decomp.multiplicity(want) != 1)
        throw InternalError("elimination step lost the leading class");
      out = genpoly_mul(p, GenPoly::z(p), express_nil_eps(p, m - s, memo));
      for (const auto& [lab, mult] : prod.decomp) {
        if (lab == want) continue;
        const auto& nil = std::get<NilLabel>(lab);
        out -= express_nil_impl(p, nil.t, nil.lambda, memo).scaled(mult);
      }
    }
  }
  memo.emplace(m, out);
  return out;
}

}  // namespace detail

/// Generator polynomial P with expand(P) = [V_m(lambda)], by the closed
/// forms where stated and by z-elimination otherwise. Verified before
/// returning.
inline GenPoly express_nil(const HopfParams& p, Int m, const Character& lam) {
  if (m < 1) throw InvalidArgument("express_nil: m >= 1 required");
  std::map<Int, GenPoly> memo;
  GenPoly out = detail::express_nil_impl(p, m, lam, memo);
  if (expand(p, out) != RingElem(make_nil(p, m, lam)))
    throw InternalError("express_nil verification failed for m=" +
                        std::to_string(m));
  return out;
}

/// Generator polynomial for [V_t(sigma, beta)] via the two-term recursion
/// [V_{t+1}] = (z - s + 1)[V_t] - [V_{t-1}] starting from sigma x_beta.
inline GenPoly express_nonnil(const HopfParams& p, Int t, const Character& sigma,
                              const CycNum& eta) {
  if (p.kind() != CaseKind::III)
    throw UnsupportedCase("express_nonnil requires |chi| finite");
  if (t < 1) throw InvalidArgument("express_nonnil: t >= 1 required");
  Int s = p.s_value();
  GenPoly zs1 = GenPoly::z(p) - GenPoly::constant(p, s - 1);
  GenPoly prev;  // [V_0] = 0
  GenPoly cur = genpoly_mul(p, GenPoly::character(p, sigma), GenPoly::x(p, eta));
  for (Int k = 2; k <= t; ++k) {
    GenPoly next = genpoly_mul(p, zs1, cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (expand(p, cur) != RingElem(make_nonnil(p, t, sigma, eta)))
    throw InternalError("express_nonnil verification failed for t=" +
                        std::to_string(t));
  return cur;
}

}  // namespace hopfgreen
