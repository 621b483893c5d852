#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <hopfgreen/cyclotomic.hpp>

namespace hopfgreen {

/// Dense matrix over Q(zeta_N). Entries default to detached zeros, so a
/// freshly constructed matrix is the zero matrix.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(Int rows, Int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  Int rows() const { return rows_; }
  Int cols() const { return cols_; }

  CycNum& at(Int i, Int j) { return a_[i * cols_ + j]; }
  const CycNum& at(Int i, Int j) const { return a_[i * cols_ + j]; }

  static Matrix identity(Int n, const CycField* f) {
    Matrix m(n, n);
    for (Int i = 0; i < n; ++i) m.at(i, i) = CycNum::one(f);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (Int i = 0; i < a.rows_; ++i)
      for (Int k = 0; k < a.cols_; ++k) {
        const CycNum& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (Int j = 0; j < b.cols_; ++j) {
          const CycNum& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j) = c.at(i, j) + aik * bkj;
        }
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InvalidArgument("matrix dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InvalidArgument("matrix dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  Matrix scaled(const CycNum& s) const {
    Matrix c(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!a_[i].is_zero()) c.a_[i] = a_[i] * s;
    return c;
  }

 private:
  Int rows_, cols_;
  std::vector<CycNum> a_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hstack: row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (Int i = 0; i < a.rows(); ++i) {
    for (Int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (Int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

inline Matrix matpow(Matrix m, Int e) {
  if (m.rows() != m.cols()) throw InvalidArgument("matpow: square required");
  if (e < 0) throw InvalidArgument("matpow: nonnegative exponent required");
  Matrix acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * m : m;
      have = true;
    }
    e >>= 1;
    if (e) m = m * m;
  }
  if (!have) throw InvalidArgument("matpow: exponent 0 needs a field context");
  return acc;
}

namespace detail {

/// In-place reduction to row echelon form with exact pivots. Returns the
/// pivot column indices in order. Pivot choice never affects the result,
/// only speed; take the first nonzero.
inline std::vector<Int> row_echelon(Matrix& m) {
  std::vector<Int> pivots;
  Int row = 0;
  for (Int col = 0; col < m.cols() && row < m.rows(); ++col) {
    Int pr = -1;
    for (Int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (Int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    CycNum inv = m.at(row, col).inv();
    for (Int j = col; j < m.cols(); ++j)
      if (!m.at(row, j).is_zero()) m.at(row, j) = m.at(row, j) * inv;
    for (Int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const CycNum& f = m.at(i, col);
      if (f.is_zero()) continue;
      CycNum factor = f;
      for (Int j = col; j < m.cols(); ++j)
        if (!m.at(row, j).is_zero())
          m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline Int rank(Matrix m) { return static_cast<Int>(detail::row_echelon(m).size()); }

/// Columns form a basis of the kernel of m.
inline Matrix nullspace(Matrix m, const CycField* f) {
  Int n = m.cols();
  auto pivots = detail::row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (Int c : pivots) is_pivot[c] = true;
  Int k = n - static_cast<Int>(pivots.size());
  Matrix basis(n, k);
  Int out = 0;
  for (Int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    basis.at(fc, out) = CycNum::one(f);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], out) = -m.at(static_cast<Int>(pi), fc);
    ++out;
  }
  return basis;
}

/// Columns form a basis of the column space of m (a subset of m's columns).
inline Matrix column_basis(const Matrix& m) {
  Matrix copy = m;
  auto pivots = detail::row_echelon(copy);
  Matrix basis(m.rows(), static_cast<Int>(pivots.size()));
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (Int i = 0; i < m.rows(); ++i) basis.at(i, j) = m.at(i, pivots[j]);
  return basis;
}

/// Solves A X = B when A has independent columns and the system is
/// consistent; nullopt otherwise.
inline std::optional<Matrix> solve_exact(const Matrix& a, const Matrix& b) {
  Matrix aug = hstack(a, b);
  auto pivots = detail::row_echelon(aug);
  for (Int c : pivots)
    if (c >= a.cols()) return std::nullopt;  // inconsistent
  if (static_cast<Int>(pivots.size()) != a.cols())
    return std::nullopt;  // columns of A dependent: solution not unique
  Matrix x(a.cols(), b.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (Int j = 0; j < b.cols(); ++j)
      x.at(pivots[pi], j) = aug.at(static_cast<Int>(pi), a.cols() + j);
  return x;
}

/// dim(U ∩ W) for subspaces given by basis-column matrices.
inline Int intersection_dim(const Matrix& u, const Matrix& w) {
  if (u.cols() == 0 || w.cols() == 0) return 0;
  return u.cols() + w.cols() - rank(hstack(u, w));
}

/// Fraction-free determinant over Z (Bareiss); used by the unimodularity
/// checks on change-of-basis truncations.
inline mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace hopfgreen
