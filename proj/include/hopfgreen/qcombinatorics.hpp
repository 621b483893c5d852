#pragma once

#include <vector>

#include <hopfgreen/cyclotomic.hpp>

namespace hopfgreen {

/// (n)_q = 1 + q + ... + q^{n-1}, with (0)_q = 0.
inline CycNum q_number(Int n, const CycNum& q) {
  if (n < 0) throw InvalidArgument("q_number: n must be nonnegative");
  CycNum acc = CycNum::zero(q.field());
  CycNum p = CycNum::one(q.field());
  for (Int i = 0; i < n; ++i) {
    acc = acc + p;
    p = p * q;
  }
  return acc;
}

/// (n)!_q = (n)_q (n-1)_q ... (1)_q, with (0)!_q = 1.
inline CycNum q_factorial(Int n, const CycNum& q) {
  if (n < 0) throw InvalidArgument("q_factorial: n must be nonnegative");
  CycNum acc = CycNum::one(q.field());
  for (Int i = 1; i <= n; ++i) acc = acc * q_number(i, q);
  return acc;
}

/// Gaussian binomial by the Pascal recursion
/// binom(n,i)_q = q^i binom(n-1,i)_q + binom(n-1,i-1)_q,
/// which stays defined even when q-factorials vanish.
inline CycNum q_binom(Int n, Int i, const CycNum& q) {
  if (n < 0 || i < 0 || i > n)
    throw InvalidArgument("q_binom: require 0 <= i <= n");
  std::vector<CycNum> row{CycNum::one(q.field())};
  for (Int m = 1; m <= n; ++m) {
    std::vector<CycNum> next(m + 1, CycNum::zero(q.field()));
    next[0] = CycNum::one(q.field());
    next[m] = CycNum::one(q.field());
    CycNum qpow = q;
    for (Int j = 1; j < m; ++j) {
      next[j] = qpow * row[j] + row[j - 1];
      qpow = qpow * q;
    }
    row = std::move(next);
  }
  return row[i];
}

}  // namespace hopfgreen
