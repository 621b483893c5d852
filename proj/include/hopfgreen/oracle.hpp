#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <hopfgreen/matrixrep.hpp>
#include <hopfgreen/tensor_rules.hpp>
#include <hopfgreen/textio.hpp>

namespace hopfgreen {

using WeightSlices = std::map<Character, std::vector<Int>, CharacterLess>;

struct CycNumLess {
  bool operator()(const CycNum& a, const CycNum& b) const {
    return compare(a, b) < 0;
  }
};

/// Candidate eigenvalues for the invertible part, each beta carrying an
/// s'-th root so recovered labels stay exactly rooted. The pool only
/// proposes; ranks decide every multiplicity, and a completeness check
/// refuses to drop mass the pool cannot explain.
class EigenPool {
 public:
  void add(const CycNum& beta, const CycNum& eta) {
    if (beta.is_zero()) return;  // zero never occurs on the invertible part
    entries_.emplace(beta, eta);
  }

  void add_labels(const Decomposition& d) {
    for (const auto& [lab, mult] : d)
      if (const auto* nn = std::get_if<NonNilLabel>(&lab)) add(nn->beta, nn->eta);
  }

  const std::map<CycNum, CycNum, CycNumLess>& entries() const { return entries_; }

 private:
  std::map<CycNum, CycNum, CycNumLess> entries_;
};

/// Partition of the basis by weight; x maps the slice of mu into the slice
/// of chi*mu (checked via rep_check).
inline WeightSlices weight_slices(const HopfParams& p, const MatrixRep& rep) {
  if (!rep_check(p, rep))
    throw InvalidRep("representation violates the weight-module invariants");
  WeightSlices slices;
  for (Int i = 0; i < rep.dim; ++i) slices[rep.weights[i]].push_back(i);
  return slices;
}

namespace detail {

struct SliceSystem {
  WeightSlices slices;
  // block of x from the slice of mu into the slice of chi*mu
  std::map<Character, Matrix, CharacterLess> xblock;
};

inline SliceSystem slice_system(const HopfParams& p, const MatrixRep& rep) {
  SliceSystem sys;
  sys.slices = weight_slices(p, rep);
  for (const auto& [mu, src] : sys.slices) {
    Character target = p.chi() * mu;
    auto it = sys.slices.find(target);
    Int rows = it == sys.slices.end() ? 0 : static_cast<Int>(it->second.size());
    Matrix block(rows, static_cast<Int>(src.size()));
    if (rows > 0)
      for (Int i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < src.size(); ++j)
          block.at(i, j) = rep.xmat.at(it->second[i], src[j]);
    sys.xblock.emplace(mu, std::move(block));
  }
  return sys;
}

}  // namespace detail

/// Fitting decomposition of each slice under Y = x^sbar: the per-slice bases
/// of ker Y^D and im Y^D, plus the x action written in those bases. With
/// sbar infinite the grading already forces x nilpotent (weight chains
/// cannot cycle), so everything is nilpotent part.
struct FittingSplit {
  WeightSlices slices;
  std::map<Character, Matrix, CharacterLess> nil_basis, inv_basis;
  std::map<Character, Matrix, CharacterLess> nil_xblock, inv_xblock;
  Int nil_dim = 0, inv_dim = 0;
};

inline FittingSplit fitting_split(const HopfParams& p, const MatrixRep& rep) {
  auto sys = detail::slice_system(p, rep);
  FittingSplit fit;
  fit.slices = sys.slices;
  const CycField* f = p.field();

  if (!p.sbar_finite()) {
    // no cycles: chains mu, chi mu, ... must leave the finite weight set
    for (const auto& [mu, src] : sys.slices) {
      Character cur = mu;
      std::size_t steps = 0;
      while (sys.slices.count(cur)) {
        if (++steps > sys.slices.size())
          throw InternalError("weight chain cycled although |chi| is infinite");
        cur = p.chi() * cur;
      }
      Int d = static_cast<Int>(src.size());
      fit.nil_basis.emplace(mu, Matrix::identity(d, f));
      fit.nil_xblock.emplace(mu, sys.xblock.at(mu));
      fit.nil_dim += d;
    }
    return fit;
  }

  Int sbar = p.sbar_value();
  for (const auto& [mu, src] : sys.slices) {
    Int d = static_cast<Int>(src.size());
    // Y restricted to the slice: composition of x blocks around the chi cycle
    Matrix y = Matrix::identity(d, f);
    Character cur = mu;
    bool dead = false;
    for (Int k = 0; k < sbar && !dead; ++k) {
      auto it = sys.xblock.find(cur);
      if (it == sys.xblock.end() || it->second.rows() == 0) {
        dead = true;
        break;
      }
      y = it->second * y;
      cur = p.chi() * cur;
    }
    Matrix power;
    if (dead || y.rows() != d) {
      power = Matrix(d, d);  // Y = 0 on this slice
    } else {
      power = y;
      Int r = rank(power);
      while (r < d) {  // full rank means already stable (Y invertible)
        Matrix next = power * y;
        Int rn = rank(next);
        if (rn == r) break;
        power = std::move(next);
        r = rn;
      }
    }
    Matrix nil = nullspace(power, f);
    Matrix inv = column_basis(power);
    if (nil.cols() + inv.cols() != d)
      throw InternalError("Fitting split does not fill the slice");
    fit.nil_dim += nil.cols();
    fit.inv_dim += inv.cols();
    fit.nil_basis.emplace(mu, std::move(nil));
    fit.inv_basis.emplace(mu, std::move(inv));
  }

  // x action in the split bases; failure to stabilize signals a bug
  for (const auto& [mu, src] : sys.slices) {
    Character target = p.chi() * mu;
    const Matrix& raw = sys.xblock.at(mu);
    auto express = [&](const std::map<Character, Matrix, CharacterLess>& bases,
                       const char* part) -> Matrix {
      const Matrix& from = bases.at(mu);
      Matrix image = raw * from;
      auto it = bases.find(target);
      Int target_dim = it == bases.end() ? 0 : it->second.cols();
      if (target_dim == 0) {
        if (!image.is_zero())
          throw InternalError(std::string(part) +
                              " part is not x-stable (image escapes)");
        return Matrix(0, from.cols());
      }
      auto sol = solve_exact(it->second, image);
      if (!sol)
        throw InternalError(std::string(part) + " part is not x-stable");
      return *sol;
    };
    fit.nil_xblock.emplace(mu, express(fit.nil_basis, "nilpotent"));
    fit.inv_xblock.emplace(mu, express(fit.inv_basis, "invertible"));
  }
  return fit;
}

/// Multiplicities of the nilpotent-type summands by graded Jordan counting:
/// with B(t, nu) = dim(ker x ∩ im x^{t-1} ∩ slice nu), the number of
/// V_t(lambda) equals B(t, nu) - B(t+1, nu) at the socle slice
/// nu = chi^{t-1} lambda.
inline Decomposition decompose_nilpotent(const HopfParams& p,
                                         const FittingSplit& fit) {
  Decomposition out;
  if (fit.nil_dim == 0) return out;
  const CycField* f = p.field();

  // comp[nu] is a reduced basis of im x^{t-1} ∩ the slice of nu; advancing
  // one step pushes the predecessor's basis through x and re-reduces, so
  // the matrices shrink as t grows
  std::map<Character, Matrix, CharacterLess> kernels;
  std::map<Character, Matrix, CharacterLess> comp;
  for (const auto& [mu, basis] : fit.nil_basis) {
    Int d = basis.cols();
    if (d == 0) continue;
    kernels.emplace(mu, nullspace(fit.nil_xblock.at(mu), f));
    comp.emplace(mu, Matrix::identity(d, f));
  }

  auto b_value = [&](const Character& nu, const Matrix& img) -> Int {
    if (img.cols() == 0) return 0;
    return intersection_dim(kernels.at(nu), img);
  };

  std::map<Character, Int, CharacterLess> b_cur;
  for (const auto& [nu, q] : comp) b_cur[nu] = b_value(nu, q);

  Int accounted = 0;
  Character chi_inv_pow = p.eps();  // chi^{-(t-1)}
  for (Int t = 1; accounted < fit.nil_dim; ++t) {
    if (t > fit.nil_dim + 1)
      throw InternalError("nilpotent decomposition failed to terminate");
    // advance image bases to length t
    std::map<Character, Matrix, CharacterLess> next;
    bool alive = false;
    for (const auto& [nu, basis] : fit.nil_basis) {
      if (basis.cols() == 0) continue;
      Character pred = p.chi_inv() * nu;
      auto it = comp.find(pred);
      Matrix q = it == comp.end() || it->second.cols() == 0
                     ? Matrix(basis.cols(), 0)
                     : column_basis(fit.nil_xblock.at(pred) * it->second);
      if (q.cols() > 0) alive = true;
      next.emplace(nu, std::move(q));
    }
    for (const auto& [nu, q] : comp) {
      Int b_next = b_value(nu, next.at(nu));
      Int mult = b_cur.at(nu) - b_next;
      if (mult < 0)
        throw InternalError("negative multiplicity in nilpotent counting");
      if (mult > 0) {
        Character lambda = chi_inv_pow * nu;
        out.add(make_nil(p, t, lambda), mult);
        accounted += mult * t;
      }
      b_cur[nu] = b_next;
    }
    comp = std::move(next);
    chi_inv_pow = chi_inv_pow * p.chi_inv();
    if (!alive && accounted < fit.nil_dim)
      throw InternalError("nilpotent mass left after chains died out");
  }
  if (accounted != fit.nil_dim)
    throw InternalError("nilpotent dimension audit failed");
  return out;
}

/// Jordan block sizes of m at eigenvalue beta from the rank sequence of
/// (m - beta I)^k: #blocks of size >= k is rank^{k-1} - rank^k.
inline std::vector<Int> jordan_blocks(const Matrix& m, const CycNum& beta,
                                      const CycField* f) {
  if (m.rows() != m.cols()) throw InvalidArgument("jordan_blocks: square matrix");
  Int d = m.rows();
  Matrix shifted = m - Matrix::identity(d, f).scaled(beta);
  std::vector<Int> ranks{d};
  Matrix power = shifted;
  while (true) {
    Int r = rank(power);
    ranks.push_back(r);
    if (r == ranks[ranks.size() - 2]) break;
    power = power * shifted;
  }
  std::vector<Int> sizes;
  for (std::size_t k = 1; k + 1 < ranks.size() + 1; ++k) {
    Int ge_k = ranks[k - 1] - ranks[k];
    Int ge_k1 = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
    for (Int c = 0; c < ge_k - ge_k1; ++c) sizes.push_back(static_cast<Int>(k));
  }
  return sizes;
}

namespace detail {

/// Y = x^sbar restricted to the invertible part of one slice.
inline Matrix invertible_y_on_slice(const HopfParams& p, const FittingSplit& fit,
                                    const Character& slice) {
  Int sbar = p.sbar_value();
  auto it = fit.inv_basis.find(slice);
  if (it == fit.inv_basis.end())
    throw InvalidArgument("no such slice in the invertible part");
  Int d = it->second.cols();
  Matrix y = Matrix::identity(d, p.field());
  Character cur = slice;
  for (Int k = 0; k < sbar; ++k) {
    auto bt = fit.inv_xblock.find(cur);
    if (bt == fit.inv_xblock.end())
      throw InternalError("invertible part cycle is broken");
    y = bt->second * y;
    cur = p.chi() * cur;
  }
  if (y.rows() != d || y.cols() != d)
    throw InternalError("invertible part blocks have mismatched dimensions");
  return y;
}

}  // namespace detail

/// Jordan data (beta -> block sizes) of x^sbar on the invertible part of one
/// slice, for every pool candidate. Exposed so the coset-consistency
/// property (any slice of a coset carries the same data) is testable.
inline std::map<CycNum, std::vector<Int>, CycNumLess> invertible_jordan_table(
    const HopfParams& p, const FittingSplit& fit, const Character& slice,
    const EigenPool& pool) {
  Matrix y = detail::invertible_y_on_slice(p, fit, slice);
  std::map<CycNum, std::vector<Int>, CycNumLess> table;
  for (const auto& [beta, eta] : pool.entries()) {
    auto sizes = jordan_blocks(y, beta, p.field());
    if (!sizes.empty()) table.emplace(beta, std::move(sizes));
  }
  return table;
}

/// Non-nilpotent summands from the invertible part: for each coset of
/// weights, the Jordan type of x^sbar on the canonical representative slice
/// lists one V_t([sigma], beta) per size-t block at beta. The generalized
/// eigenspaces must exhaust the slice or the pool is reported incomplete.
inline Decomposition decompose_invertible(const HopfParams& p,
                                          const FittingSplit& fit,
                                          const EigenPool& pool) {
  Decomposition out;
  if (fit.inv_dim == 0) return out;
  Int sbar = p.sbar_value();

  std::map<Character, bool, CharacterLess> visited;
  for (const auto& [mu, basis] : fit.inv_basis) {
    if (basis.cols() == 0 || visited.count(mu)) continue;
    Character rep_char = p.coset_rep(mu);
    Character cur = mu;
    for (Int j = 0; j < sbar; ++j) {
      visited[cur] = true;
      cur = p.chi() * cur;
    }
    auto it = fit.inv_basis.find(rep_char);
    if (it == fit.inv_basis.end() || it->second.cols() != basis.cols())
      throw InternalError(
          "invertible part has unequal dimensions across a coset");
    Int slice_dim = it->second.cols();

    auto table = invertible_jordan_table(p, fit, rep_char, pool);
    Int explained = 0;
    for (const auto& [beta, sizes] : table) {
      const CycNum& eta = pool.entries().at(beta);
      for (Int t : sizes) {
        out.add(make_nonnil(p, t, rep_char, eta), 1);
        explained += t;
      }
    }
    if (explained != slice_dim)
      throw IncompleteEigenPool(to_string(rep_char), slice_dim - explained);
  }
  return out;
}

/// Full pipeline: weight slices, Fitting split, then graded Jordan counting
/// on the nilpotent part and pooled Jordan types on the invertible part.
inline Decomposition oracle_decompose(const HopfParams& p, const MatrixRep& rep,
                                      const EigenPool& pool = {}) {
  FittingSplit fit = fitting_split(p, rep);
  Decomposition out = decompose_nilpotent(p, fit);
  out += decompose_invertible(p, fit, pool);
  if (out.dim(p) != rep.dim)
    throw InternalError("oracle dimension audit failed");
  return out;
}

}  // namespace hopfgreen
