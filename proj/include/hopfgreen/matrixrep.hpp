#pragma once

#include <utility>
#include <vector>

#include <hopfgreen/labels.hpp>
#include <hopfgreen/matrix.hpp>

namespace hopfgreen {

/// Explicit matrices of the group generators and of x on a weight-graded
/// basis. Invariants: the g-matrices are diagonal with entries given by the
/// stored weights, and x maps the weight-mu slice into the weight-chi*mu
/// slice (equivalent to the defining relation xg = chi^{-1}(g) g x).
struct MatrixRep {
  Int dim = 0;
  std::vector<Matrix> gmats;
  Matrix xmat;
  std::vector<Character> weights;
};

namespace detail {

inline std::vector<Character> weight_chain(const HopfParams& p,
                                           const Character& base, Int len) {
  std::vector<Character> w;
  w.reserve(len);
  Character cur = base;
  for (Int i = 0; i < len; ++i) {
    w.push_back(cur);
    if (i + 1 < len) cur = p.chi() * cur;
  }
  return w;
}

inline std::vector<Matrix> diagonal_gmats(const HopfParams& p,
                                          const std::vector<Character>& weights) {
  Int ngens = p.group()->num_generators();
  Int dim = static_cast<Int>(weights.size());
  std::vector<Matrix> gmats;
  gmats.reserve(ngens);
  for (Int g = 0; g < ngens; ++g) {
    Matrix m(dim, dim);
    GroupElement gen = p.group()->generator(g);
    for (Int i = 0; i < dim; ++i) m.at(i, i) = weights[i].eval(gen);
    gmats.push_back(std::move(m));
  }
  return gmats;
}

}  // namespace detail

/// V_t(lambda): g.m_i = chi^i(g) lambda(g) m_i, x.m_i = m_{i+1}, x.m_{t-1} = 0.
inline MatrixRep build_nil(const HopfParams& p, Int t, const Character& lambda) {
  if (t < 1) throw InvalidArgument("build_nil: t must be >= 1");
  MatrixRep rep;
  rep.dim = t;
  rep.weights = detail::weight_chain(p, lambda, t);
  rep.gmats = detail::diagonal_gmats(p, rep.weights);
  rep.xmat = Matrix(t, t);
  for (Int i = 0; i + 1 < t; ++i) rep.xmat.at(i + 1, i) = CycNum::one(p.field());
  return rep;
}

/// V_t(sigma, beta) with beta = eta^{s'}: dimension t*sbar, x is the shift
/// with wrap-around column read off from (y - beta)^t = y^t - sum a_j y^j.
inline MatrixRep build_nonnil(const HopfParams& p, Int t, const Character& sigma,
                              const CycNum& eta) {
  if (p.kind() != CaseKind::III)
    throw UnsupportedCase(
        "non-nilpotent modules exist only when |chi| is finite");
  if (t < 1) throw InvalidArgument("build_nonnil: t must be >= 1");
  if (eta.is_zero()) throw InvalidArgument("build_nonnil: eta must be nonzero");
  Int sbar = p.sbar_value();
  CycNum beta = eta.pow(p.sprime());
  Int dim = t * sbar;

  MatrixRep rep;
  rep.dim = dim;
  rep.weights = detail::weight_chain(p, sigma, dim);
  rep.gmats = detail::diagonal_gmats(p, rep.weights);
  rep.xmat = Matrix(dim, dim);
  for (Int i = 0; i + 1 < dim; ++i) rep.xmat.at(i + 1, i) = CycNum::one(p.field());
  // a_j = (-1)^{t+1-j} binom(t, j) beta^{t-j}
  mpz_class binom;
  for (Int j = 0; j < t; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), t, j);
    CycNum aj = CycNum::integer(p.field(), binom) * beta.pow(t - j);
    if ((t + 1 - j) % 2 != 0) aj = -aj;
    rep.xmat.at(j * sbar, dim - 1) = aj;
  }
  return rep;
}

inline MatrixRep build_label(const HopfParams& p, const Label& lab) {
  if (const auto* nil = std::get_if<NilLabel>(&lab))
    return build_nil(p, nil->t, nil->lambda);
  const auto& nn = std::get<NonNilLabel>(lab);
  return build_nonnil(p, nn.t, nn.sigma, nn.eta);
}

inline MatrixRep direct_sum(const HopfParams& p, const MatrixRep& a,
                            const MatrixRep& b) {
  MatrixRep rep;
  rep.dim = a.dim + b.dim;
  rep.weights = a.weights;
  rep.weights.insert(rep.weights.end(), b.weights.begin(), b.weights.end());
  rep.xmat = Matrix(rep.dim, rep.dim);
  for (Int i = 0; i < a.dim; ++i)
    for (Int j = 0; j < a.dim; ++j) rep.xmat.at(i, j) = a.xmat.at(i, j);
  for (Int i = 0; i < b.dim; ++i)
    for (Int j = 0; j < b.dim; ++j)
      rep.xmat.at(a.dim + i, a.dim + j) = b.xmat.at(i, j);
  rep.gmats = detail::diagonal_gmats(p, rep.weights);
  return rep;
}

inline MatrixRep build_decomposition(const HopfParams& p, const Decomposition& d) {
  MatrixRep rep;
  bool first = true;
  for (const auto& [lab, mult] : d) {
    MatrixRep block = build_label(p, lab);
    for (Int k = 0; k < mult; ++k) {
      if (first) {
        rep = block;
        first = false;
      } else {
        rep = direct_sum(p, rep, block);
      }
    }
  }
  if (first) throw InvalidArgument("cannot realize the zero module as a rep");
  return rep;
}

/// Delta(x) = x (x) a + 1 (x) x: on A (x) B the generators act diagonally by
/// products of weights and x acts as x_A (x) rho_B(a) + I (x) x_B.
inline MatrixRep tensor_rep(const HopfParams& p, const MatrixRep& a,
                            const MatrixRep& b) {
  MatrixRep rep;
  rep.dim = a.dim * b.dim;
  rep.weights.reserve(rep.dim);
  for (Int i = 0; i < a.dim; ++i)
    for (Int j = 0; j < b.dim; ++j) rep.weights.push_back(a.weights[i] * b.weights[j]);
  rep.gmats = detail::diagonal_gmats(p, rep.weights);

  std::vector<CycNum> b_a_action(b.dim);
  for (Int j = 0; j < b.dim; ++j) b_a_action[j] = b.weights[j].eval(p.a());

  rep.xmat = Matrix(rep.dim, rep.dim);
  for (Int i = 0; i < a.dim; ++i)
    for (Int ii = 0; ii < a.dim; ++ii) {
      const CycNum& xa = a.xmat.at(ii, i);
      if (xa.is_zero()) continue;
      for (Int j = 0; j < b.dim; ++j) {
        CycNum& c = rep.xmat.at(ii * b.dim + j, i * b.dim + j);
        c = c + xa * b_a_action[j];
      }
    }
  for (Int i = 0; i < a.dim; ++i)
    for (Int j = 0; j < b.dim; ++j)
      for (Int jj = 0; jj < b.dim; ++jj) {
        const CycNum& xb = b.xmat.at(jj, j);
        if (xb.is_zero()) continue;
        CycNum& c = rep.xmat.at(i * b.dim + jj, i * b.dim + j);
        c = c + xb;
      }
  return rep;
}

/// Checks every MatrixRep invariant: diagonal g-action matching the stored
/// weights and weight-gradedness of x (together these are exactly the
/// defining relation xg = chi^{-1}(g) g x plus weight-module structure).
inline bool rep_check(const HopfParams& p, const MatrixRep& rep) {
  Int ngens = p.group()->num_generators();
  if (static_cast<Int>(rep.gmats.size()) != ngens) return false;
  if (static_cast<Int>(rep.weights.size()) != rep.dim) return false;
  if (rep.xmat.rows() != rep.dim || rep.xmat.cols() != rep.dim) return false;
  for (Int g = 0; g < ngens; ++g) {
    const Matrix& m = rep.gmats[g];
    if (m.rows() != rep.dim || m.cols() != rep.dim) return false;
    GroupElement gen = p.group()->generator(g);
    for (Int i = 0; i < rep.dim; ++i)
      for (Int j = 0; j < rep.dim; ++j) {
        if (i == j) {
          if (m.at(i, i) != rep.weights[i].eval(gen)) return false;
        } else if (!m.at(i, j).is_zero()) {
          return false;
        }
      }
  }
  for (Int i = 0; i < rep.dim; ++i)
    for (Int j = 0; j < rep.dim; ++j) {
      if (rep.xmat.at(i, j).is_zero()) continue;
      if (rep.weights[i] != p.chi() * rep.weights[j]) return false;
    }
  return true;
}

}  // namespace hopfgreen
