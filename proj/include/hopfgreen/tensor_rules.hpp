#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <hopfgreen/labels.hpp>
#include <hopfgreen/textio.hpp>

namespace hopfgreen {

/// Identifies which closed formula produced a decomposition, with the branch
/// parameters that selected it. Composite (bilinear) results carry one child
/// trace per label pair.
struct RuleTrace {
  std::string rule_id;
  std::vector<std::pair<std::string, Int>> branch;
  std::vector<RuleTrace> children;
};

struct RuleResult {
  Decomposition decomp;
  RuleTrace trace;
};

enum class Side { Left, Right };

namespace detail {

/// Incrementally memoized powers of chi times a base character.
class CharChain {
 public:
  CharChain(const HopfParams& p, Character base)
      : p_(p) {
    pow_.push_back(std::move(base));
  }
  const Character& at(Int k) {
    while (static_cast<Int>(pow_.size()) <= k)
      pow_.push_back(p_.chi() * pow_.back());
    return pow_[k];
  }

 private:
  const HopfParams& p_;
  std::vector<Character> pow_;
};

// General form for two nilpotent factors; requires s finite and n >= t.
// Writing n = r's + l', t = rs + l with 0 <= l, l' <= s-1, the summands fall
// into four families per branch; empty index ranges simply contribute
// nothing, and the V-indices are always >= 1 when n >= t.
inline Decomposition nil_nil_general(const HopfParams& p, Int n,
                                     const Character& lam, Int t,
                                     const Character& sig, RuleTrace* trace) {
  Int s = p.s_value();
  Int rp = n / s, lp = n % s;
  Int r = t / s, l = t % s;
  CharChain chi_pow(p, lam * sig);
  Decomposition out;
  auto add = [&](Int dim, Int chi_exp) {
    if (dim <= 0) throw InternalError("nil_nil_general produced V_0");
    out.add(make_nil(p, dim, chi_pow.at(chi_exp)), 1);
  };

  if (l + lp <= s) {
    Int lo = std::min(l, lp), hi = std::max(l, lp);
    // family of "long" terms at j < lo, present for i = 0..r
    for (Int i = 0; i <= r; ++i)
      for (Int j = 0; j < lo; ++j) add(n + t - 1 - 2 * i * s - 2 * j, j + i * s);
    // plateau between lo and hi
    Int plateau_top = (l <= lp) ? r - 1 : r;
    for (Int i = 0; i <= plateau_top; ++i)
      for (Int j = lo; j < hi; ++j) add((r + rp - 2 * i) * s, j + i * s);
    for (Int i = 0; i <= r - 1; ++i)
      for (Int j = hi; j < l + lp; ++j) add(n + t - 1 - 2 * i * s - 2 * j, j + i * s);
    for (Int i = 0; i <= r - 1; ++i)
      for (Int j = l + lp; j <= s - 1; ++j) add((r + rp - 1 - 2 * i) * s, j + i * s);
    if (trace) {
      trace->rule_id = "nil-nil/general";
      trace->branch = {{"s", s},      {"r", r},   {"l", l},
                       {"rprime", rp}, {"lprime", lp}, {"sum_le_s", 1}};
    }
  } else {
    Int m = l + lp - s - 1;
    Int lo = std::min(l, lp), hi = std::max(l, lp);
    for (Int i = 0; i <= r; ++i)
      for (Int j = 0; j <= m; ++j) add((r + rp + 1 - 2 * i) * s, j + i * s);
    for (Int i = 0; i <= r; ++i)
      for (Int j = m + 1; j < lo; ++j) add(n + t - 1 - 2 * i * s - 2 * j, j + i * s);
    Int plateau_top = (l <= lp) ? r - 1 : r;
    for (Int i = 0; i <= plateau_top; ++i)
      for (Int j = lo; j < hi; ++j) add((r + rp - 2 * i) * s, j + i * s);
    for (Int i = 0; i <= r - 1; ++i)
      for (Int j = hi; j <= s - 1; ++j) add(n + t - 1 - 2 * i * s - 2 * j, j + i * s);
    if (trace) {
      trace->rule_id = "nil-nil/general";
      trace->branch = {{"s", s},      {"r", r},   {"l", l},      {"rprime", rp},
                       {"lprime", lp}, {"m", m},   {"sum_le_s", 0}};
    }
  }
  return out;
}

// Fast path: V_{s+1}(lam) (x) V_t(sig).
inline Decomposition nil_nil_sp1(const HopfParams& p, const Character& lam,
                                 Int t, const Character& sig) {
  Int s = p.s_value();
  CharChain chi_pow(p, lam * sig);
  Decomposition out;
  auto add = [&](Int dim, Int chi_exp) {
    if (dim > 0) out.add(make_nil(p, dim, chi_pow.at(chi_exp)), 1);
  };
  if (t % s == 0) {
    add(t - s, s);
    add(t + s, 0);
    for (Int i = 1; i <= s - 1; ++i) add(t, i);
  } else {
    Int r = t / s, l = t % s;
    if (r == 0) {
      add(s + l, 0);
      for (Int i = 1; i <= l - 1; ++i) add(s, i);
    } else {
      add(t + s, 0);
      for (Int i = 1; i <= l - 1; ++i) add((r + 1) * s, i);
      add(t + s - 2 * l, l);
      for (Int i = l + 1; i <= s - 1; ++i) add(r * s, i);
      add(t - s, s);
    }
  }
  return out;
}

// Fast path: V_n(lam) (x) V_t(sig) with s | t.
inline Decomposition nil_nil_multiple(const HopfParams& p, Int n,
                                      const Character& lam, Int t,
                                      const Character& sig) {
  Int s = p.s_value();
  Int r = t / s, rp = n / s, l = n % s;
  CharChain chi_pow(p, lam * sig);
  Decomposition out;
  for (Int i = 0; i <= std::min(rp, r - 1); ++i)
    for (Int j = 0; j <= l - 1; ++j)
      out.add(make_nil(p, (r + rp - 2 * i) * s, chi_pow.at(j + i * s)), 1);
  for (Int i = 0; i <= std::min(r, rp) - 1; ++i)
    for (Int j = l; j <= s - 1; ++j)
      out.add(make_nil(p, (r + rp - 1 - 2 * i) * s, chi_pow.at(j + i * s)), 1);
  return out;
}

// Fast path: V_n(lam) (x) V_{rs+1}(sig) with s not dividing n.
inline Decomposition nil_nil_near_multiple(const HopfParams& p, Int n,
                                           const Character& lam, Int r,
                                           const Character& sig) {
  Int s = p.s_value();
  Int rp = n / s, l = n % s;
  CharChain chi_pow(p, lam * sig);
  Decomposition out;
  for (Int i = 0; i <= std::min(rp, r); ++i)
    out.add(make_nil(p, (r + rp - 2 * i) * s + l, chi_pow.at(i * s)), 1);
  for (Int i = 0; i <= std::min(rp, r - 1); ++i)
    for (Int j = 1; j <= l - 1; ++j)
      out.add(make_nil(p, (r + rp - 2 * i) * s, chi_pow.at(j + i * s)), 1);
  for (Int i = 0; i <= std::min(rp, r) - 1; ++i)
    out.add(make_nil(p, (r + rp - 2 * i) * s - l, chi_pow.at(l + i * s)), 1);
  for (Int i = 0; i <= std::min(rp, r) - 1; ++i)
    for (Int j = l + 1; j <= s - 1; ++j)
      out.add(make_nil(p, (r + rp - 1 - 2 * i) * s, chi_pow.at(j + i * s)), 1);
  return out;
}

inline void cross_check(const Decomposition& got, const Decomposition& expect,
                        const char* which) {
  if (got != expect)
    throw InternalError(std::string("tensor rule transcription mismatch (") +
                        which + "): " + to_string(got) + " vs " +
                        to_string(expect));
}

}  // namespace detail

/// V_n(lam) (x) V_t(sig). With |q| infinite this is the Clebsch-Gordan-style
/// ladder; with |q| = s finite the general four-family formula applies (the
/// two orders are isomorphic, so arguments are swapped when n < t). The
/// special-shape formulas are evaluated as well whenever they apply and any
/// disagreement with the general form is a hard error.
inline RuleResult tensor_nil_nil(const HopfParams& p, Int n, const Character& lam,
                                 Int t, const Character& sig) {
  if (n < 1 || t < 1) throw InvalidArgument("tensor_nil_nil: dims must be >= 1");
  RuleResult res;
  if (!p.s_finite()) {
    detail::CharChain chi_pow(p, lam * sig);
    for (Int i = 1; i <= std::min(n, t); ++i)
      res.decomp.add(make_nil(p, n + t + 1 - 2 * i, chi_pow.at(i - 1)), 1);
    res.trace.rule_id = "nil-nil/q-infinite";
    res.trace.branch = {{"n", n}, {"t", t}};
  } else {
    Int s = p.s_value();
    bool swapped = n < t;
    Int a = swapped ? t : n, b = swapped ? n : t;
    const Character& ca = swapped ? sig : lam;
    const Character& cb = swapped ? lam : sig;
    res.decomp = detail::nil_nil_general(p, a, ca, b, cb, &res.trace);
    if (swapped) res.trace.branch.emplace_back("swapped", 1);

    if (n == s + 1)
      detail::cross_check(res.decomp, detail::nil_nil_sp1(p, lam, t, sig),
                          "V_{s+1} left");
    if (t == s + 1)
      detail::cross_check(res.decomp, detail::nil_nil_sp1(p, sig, n, lam),
                          "V_{s+1} right");
    if (t % s == 0)
      detail::cross_check(res.decomp, detail::nil_nil_multiple(p, n, lam, t, sig),
                          "s | t");
    if (n % s == 0)
      detail::cross_check(res.decomp, detail::nil_nil_multiple(p, t, sig, n, lam),
                          "s | n");
    if (t % s == 1 && n % s != 0)
      detail::cross_check(
          res.decomp, detail::nil_nil_near_multiple(p, n, lam, (t - 1) / s, sig),
          "t = rs+1");
    if (n % s == 1 && t % s != 0)
      detail::cross_check(
          res.decomp, detail::nil_nil_near_multiple(p, t, sig, (n - 1) / s, lam),
          "n = rs+1");
  }
  if (res.decomp.dim(p) != n * t)
    throw InternalError("tensor_nil_nil: dimension not conserved");
  return res;
}

/// V_n(lam) (x) V_t(sigma, beta) (Side::Left) or the reversed order
/// (Side::Right). The right-hand order replaces beta by lam(a)^sbar beta,
/// carried on roots as eta -> lam(a)^s eta. Writing n = us + r:
///   (+)_{i=1..min(t,u)}   (s-r) V_{2i-1+|t-u|}(sigma lam, beta)
///   (+)_{i=1..min(t,u+1)}  r    V_{2i-1+|t-u-1|}(sigma lam, beta)
inline RuleResult tensor_nil_nonnil(const HopfParams& p, Int n,
                                    const Character& lam, const NonNilLabel& lab,
                                    Side side) {
  if (p.kind() != CaseKind::III)
    throw UnsupportedCase("non-nilpotent factors require |chi| finite");
  if (n < 1) throw InvalidArgument("tensor_nil_nonnil: n must be >= 1");
  Int s = p.s_value();
  Int u = n / s, r = n % s;
  Int t = lab.t;
  Character outchar = lab.sigma * lam;
  CycNum eta = lab.eta;
  if (side == Side::Right) {
    CycNum la = lam.eval(p.a());
    eta = eta * la.pow(s);
  }
  RuleResult res;
  for (Int i = 1; i <= std::min(t, u); ++i)
    res.decomp.add(
        make_nonnil(p, 2 * i - 1 + std::labs(t - u), outchar, eta), s - r);
  if (r > 0)
    for (Int i = 1; i <= std::min(t, u + 1); ++i)
      res.decomp.add(
          make_nonnil(p, 2 * i - 1 + std::labs(t - u - 1), outchar, eta), r);
  res.trace.rule_id = "nil-nonnil";
  res.trace.branch = {{"n", n},
                      {"t", t},
                      {"u", u},
                      {"r", r},
                      {"right", side == Side::Right ? 1 : 0}};
  if (res.decomp.dim(p) != n * t * p.sbar_value())
    throw InternalError("tensor_nil_nonnil: dimension not conserved");
  return res;
}

/// Eigenvalue grid for a non-nil (x) non-nil product: with theta^{s'} = alpha
/// and eta^{s'} = beta, alpha_{1j} = theta lam(a)^s + eta xi^{j-1} and
/// alpha_j = alpha_{1j}^{s'}. Returns (alpha_j, alpha_{1j}) for j = 1..s'.
/// The multiset {alpha_j} does not depend on which roots theta, eta were
/// carried.
inline std::vector<std::pair<CycNum, CycNum>> alpha_grid(const HopfParams& p,
                                                         const CycNum& theta,
                                                         const CycNum& eta,
                                                         const Character& lam) {
  Int sp = p.sprime();
  CycNum las = lam.eval(p.a()).pow(p.s_value());
  CycNum base = theta * las;
  std::vector<std::pair<CycNum, CycNum>> grid;
  grid.reserve(sp);
  CycNum xipow = CycNum::one(p.field());
  for (Int j = 1; j <= sp; ++j) {
    CycNum a1j = base + eta * xipow;
    grid.emplace_back(a1j.pow(sp), a1j);
    xipow = xipow * p.xi();
  }
  return grid;
}

/// V_n(sigma, alpha) (x) V_t(lam, beta). Generic branch when
/// beta + (-1)^{s'+1} alpha lam(a)^sbar != 0; otherwise the unique j0 with
/// alpha_{j0} = 0 drops out and the missing mass reappears as the nilpotent
/// block (+)_{i,j} V_{(2i-1+|n-t|)s}(chi^j sigma lam). Both degeneracy tests
/// (scalar and grid) are computed and must agree.
inline RuleResult tensor_nonnil_nonnil(const HopfParams& p, const NonNilLabel& a,
                                       const NonNilLabel& b) {
  if (p.kind() != CaseKind::III)
    throw UnsupportedCase("non-nilpotent factors require |chi| finite");
  Int s = p.s_value(), sbar = p.sbar_value(), sp = p.sprime();
  Int n = a.t, t = b.t;
  Character outchar = a.sigma * b.sigma;
  CycNum la_sbar = b.sigma.eval(p.a()).pow(sbar);

  auto grid = alpha_grid(p, a.eta, b.eta, b.sigma);
  CycNum degtest = b.beta + ((sp + 1) % 2 == 0 ? a.beta * la_sbar
                                               : -(a.beta * la_sbar));
  std::vector<Int> zero_js;
  for (Int j = 0; j < sp; ++j)
    if (grid[j].first.is_zero()) zero_js.push_back(j);
  if (degtest.is_zero() != !zero_js.empty())
    throw InternalError(
        "degeneracy tests disagree between scalar form and alpha grid");

  RuleResult res;
  Int mn = std::min(n, t), gap = std::labs(n - t);
  if (!degtest.is_zero()) {
    for (Int i = 1; i <= mn; ++i)
      for (Int j = 0; j < sp; ++j)
        res.decomp.add(make_nonnil(p, 2 * i - 1 + gap, outchar, grid[j].second),
                       s);
    res.trace.rule_id = "nonnil-nonnil/generic";
    res.trace.branch = {{"n", n}, {"t", t}, {"sprime", sp}};
  } else {
    if (zero_js.size() != 1)
      throw InternalError("degenerate alpha grid must contain exactly one zero");
    Int j0 = zero_js[0];
    for (Int i = 1; i <= mn; ++i)
      for (Int j = 0; j < sp; ++j) {
        if (j == j0) continue;
        res.decomp.add(make_nonnil(p, 2 * i - 1 + gap, outchar, grid[j].second),
                       s);
      }
    detail::CharChain chi_pow(p, outchar);
    for (Int i = 1; i <= mn; ++i)
      for (Int j = 0; j < sbar; ++j)
        res.decomp.add(make_nil(p, (2 * i - 1 + gap) * s, chi_pow.at(j)), 1);
    res.trace.rule_id = "nonnil-nonnil/degenerate";
    res.trace.branch = {{"n", n}, {"t", t}, {"sprime", sp}, {"j0", j0 + 1}};
  }
  if (res.decomp.dim(p) != n * t * sbar * sbar)
    throw InternalError("tensor_nonnil_nonnil: dimension not conserved");
  return res;
}

inline RuleResult tensor_labels(const HopfParams& p, const Label& a,
                                const Label& b) {
  const auto* na = std::get_if<NilLabel>(&a);
  const auto* nb = std::get_if<NilLabel>(&b);
  if (na && nb) return tensor_nil_nil(p, na->t, na->lambda, nb->t, nb->lambda);
  if (na)
    return tensor_nil_nonnil(p, na->t, na->lambda, std::get<NonNilLabel>(b),
                             Side::Left);
  if (nb)
    return tensor_nil_nonnil(p, nb->t, nb->lambda, std::get<NonNilLabel>(a),
                             Side::Right);
  return tensor_nonnil_nonnil(p, std::get<NonNilLabel>(a),
                              std::get<NonNilLabel>(b));
}

/// Bilinear extension over direct sums; dispatches to the three kernels.
inline RuleResult tensor_decomp(const HopfParams& p, const Decomposition& a,
                                const Decomposition& b) {
  RuleResult res;
  res.trace.rule_id = "bilinear";
  for (const auto& [la, ma] : a)
    for (const auto& [lb, mb] : b) {
      RuleResult part = tensor_labels(p, la, lb);
      res.decomp += part.decomp.scaled(ma * mb);
      res.trace.children.push_back(std::move(part.trace));
    }
  if (res.decomp.dim(p) != a.dim(p) * b.dim(p))
    throw InternalError("tensor_decomp: dimension not conserved");
  return res;
}

}  // namespace hopfgreen
