#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <hopfgreen/errors.hpp>

namespace hopfgreen {

using Int = long;
using Rat = mpq_class;

namespace detail {

using ZPoly = std::vector<mpz_class>;  // little-endian coefficients

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of num by a monic divisor; the division must be exact.
inline ZPoly zdiv_exact_monic(ZPoly num, const ZPoly& den) {
  ztrim(num);
  if (den.empty() || den.back() != 1)
    throw InternalError("zdiv_exact_monic: divisor not monic");
  if (num.size() < den.size()) {
    ztrim(num);
    if (!num.empty()) throw InternalError("zdiv_exact_monic: not divisible");
    return {};
  }
  ZPoly quot(num.size() - den.size() + 1, mpz_class(0));
  for (Int k = static_cast<Int>(quot.size()) - 1; k >= 0; --k) {
    mpz_class c = num[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  ztrim(num);
  if (!num.empty()) throw InternalError("zdiv_exact_monic: nonzero remainder");
  return quot;
}

// N-th cyclotomic polynomial: (x^n - 1) / prod of Phi_d over proper divisors.
inline ZPoly cyclotomic_poly(Int n) {
  std::map<Int, ZPoly> memo;
  for (Int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    ZPoly p(d + 1, mpz_class(0));
    p[0] = -1;
    p[d] = 1;
    for (const auto& [e, phi_e] : memo)
      if (d % e == 0) p = zdiv_exact_monic(std::move(p), phi_e);
    memo[d] = std::move(p);
  }
  return memo[n];
}

inline std::vector<Int> divisors_sorted(Int n) {
  std::vector<Int> ds;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace detail

/// Precomputed data for Q(zeta_N): the minimal polynomial Phi_N and the
/// reduction of x^k to the basis {zeta^i : 0 <= i < phi(N)}. Instances are
/// interned per N and never destroyed, so raw pointers stay valid.
class CycField {
 public:
  static const CycField* get(Int n) {
    if (n < 1) throw InvalidArgument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<CycField>>* registry =
        new std::map<Int, std::unique_ptr<CycField>>();
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry->find(n);
    if (it == registry->end())
      it = registry->emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
    return it->second.get();
  }

  Int order() const { return n_; }
  Int degree() const { return deg_; }
  /// Every root of unity in Q(zeta_N) has order dividing lcm(2, N).
  Int root_group_order() const { return lord_; }
  const std::vector<Rat>& reduction_row(Int k) const { return red_[k - deg_]; }
  const std::vector<Rat>& zeta_l() const { return zeta_l_; }
  const std::vector<Rat>& phi() const { return phi_; }

 private:
  explicit CycField(Int n) : n_(n) {
    auto zphi = detail::cyclotomic_poly(n);
    deg_ = static_cast<Int>(zphi.size()) - 1;
    phi_.reserve(zphi.size());
    for (const auto& c : zphi) phi_.emplace_back(c);
    lord_ = std::lcm<Int>(2, n);

    // x^k mod Phi for deg <= k <= 2*deg - 2
    if (deg_ >= 1) {
      std::vector<Rat> row(deg_);
      for (Int i = 0; i < deg_; ++i) row[i] = -phi_[i];  // Phi monic
      red_.push_back(row);
      for (Int k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
        std::vector<Rat> next(deg_);
        for (Int i = 0; i + 1 < deg_; ++i) next[i + 1] = row[i];
        Rat top = row[deg_ - 1];
        if (top != 0)
          for (Int i = 0; i < deg_; ++i) next[i] += top * red_[0][i];
        red_.push_back(next);
        row = std::move(next);
      }
    }

    zeta_l_ = compute_zeta_l();
  }

  std::vector<Rat> reduce_from_monomial(Int k) const {
    // x^k mod Phi as a coefficient vector, k >= 0
    std::vector<Rat> cur(1, Rat(1));
    for (Int i = 0; i < k % n_; ++i) {
      std::vector<Rat> next(cur.size() + 1);
      for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
      if (static_cast<Int>(next.size()) > deg_) {
        Rat top = next[deg_];
        next.resize(deg_);
        for (Int j = 0; j < deg_; ++j) next[j] += top * red_[0][j];
      }
      cur = std::move(next);
    }
    cur.resize(deg_);
    return cur;
  }

  std::vector<Rat> compute_zeta_l() const {
    if (n_ % 2 == 0) return reduce_from_monomial(1);
    // N odd: zeta_{2N} = -zeta_N^{(N+1)/2}
    auto v = reduce_from_monomial((n_ + 1) / 2);
    for (auto& c : v) c = -c;
    return v;
  }

  Int n_, deg_, lord_;
  std::vector<Rat> phi_;
  std::vector<std::vector<Rat>> red_;
  std::vector<Rat> zeta_l_;
};

/// Element of Q(zeta_N) in reduced canonical form: coefficients on the basis
/// {zeta^i : 0 <= i < phi(N)} with trailing zeros stripped, so equality is
/// plain vector equality. A default-constructed value is a detached zero that
/// combines with any field.
class CycNum {
 public:
  CycNum() : field_(nullptr) {}

  static CycNum zero(const CycField* f) { return CycNum(f, {}); }
  static CycNum one(const CycField* f) { return integer(f, 1); }
  static CycNum integer(const CycField* f, const mpz_class& v) {
    return rational(f, Rat(v));
  }
  static CycNum rational(const CycField* f, const Rat& v) {
    if (v == 0) return zero(f);
    return CycNum(f, {v});
  }
  /// zeta_N^k as an element of Q(zeta_N).
  static CycNum root_of_unity(const CycField* f, Int k) {
    Int n = f->order();
    Int r = ((k % n) + n) % n;
    return monomial_power(f, r);
  }
  /// zeta_m^k for any m dividing lcm(2, N).
  static CycNum root_of_unity_order(const CycField* f, Int m, Int k) {
    Int l = f->root_group_order();
    if (m < 1 || l % m != 0)
      throw InvalidArgument("no root of unity of order " + std::to_string(m) +
                            " in Q(zeta_" + std::to_string(f->order()) + ")");
    CycNum zl(f, f->zeta_l());
    Int e = (l / m) * (((k % m) + m) % m);
    return zl.pow(e);
  }

  const CycField* field() const { return field_; }
  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const {
    return coeff_.size() == 1 && coeff_[0] == 1;
  }
  bool is_rational() const { return coeff_.size() <= 1; }
  Rat rational_part() const {
    if (!is_rational()) throw InvalidArgument("value is not rational");
    return coeff_.empty() ? Rat(0) : coeff_[0];
  }
  const std::vector<Rat>& coefficients() const { return coeff_; }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    const CycField* f = merge_fields(a, b);
    std::vector<Rat> c(std::max(a.coeff_.size(), b.coeff_.size()));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) c[i] = a.coeff_[i];
    for (std::size_t i = 0; i < b.coeff_.size(); ++i) c[i] += b.coeff_[i];
    return CycNum(f, std::move(c));
  }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }
  CycNum operator-() const {
    std::vector<Rat> c(coeff_);
    for (auto& x : c) x = -x;
    return CycNum(field_, std::move(c));
  }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    const CycField* f = merge_fields(a, b);
    if (a.is_zero() || b.is_zero()) return zero(f);
    std::vector<Rat> prod(a.coeff_.size() + b.coeff_.size() - 1);
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
      if (a.coeff_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
        if (b.coeff_[j] == 0) continue;
        prod[i + j] += a.coeff_[i] * b.coeff_[j];
      }
    }
    reduce(f, prod);
    return CycNum(f, std::move(prod));
  }
  CycNum inv() const {
    if (is_zero()) throw DivisionByZero();
    if (!field_) return CycNum(nullptr, {Rat(1) / coeff_[0]});
    // extended Euclid on (this, Phi) over Q[x]; Phi irreducible so the gcd
    // is a unit
    std::vector<Rat> r0 = field_->phi();
    std::vector<Rat> r1 = coeff_;
    std::vector<Rat> s0 = {}, s1 = {Rat(1)};
    while (true) {
      trim(r1);
      if (r1.empty()) throw InternalError("cyclotomic inverse: zero remainder");
      if (r1.size() == 1) {
        // gcd reached a constant
        std::vector<Rat> out(s1);
        Rat c = r1[0];
        for (auto& x : out) x /= c;
        reduce_mod_phi(field_, out);
        return CycNum(field_, std::move(out));
      }
      auto [q, r] = poly_divmod(r0, r1);
      // s_next = s0 - q*s1
      std::vector<Rat> snext = s0;
      std::vector<Rat> qs = poly_mul(q, s1);
      if (snext.size() < qs.size()) snext.resize(qs.size());
      for (std::size_t i = 0; i < qs.size(); ++i) snext[i] -= qs[i];
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(snext);
    }
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  CycNum pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    CycNum base = *this;
    CycNum acc = field_ ? one(field_) : CycNum(nullptr, {Rat(1)});
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.coeff_.size() != b.coeff_.size()) return false;
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
      if (a.coeff_[i] != b.coeff_[i]) return false;
    return true;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Total order used for canonical label and coset-representative choices:
  /// lexicographic on the canonical coefficient vector.
  friend int compare(const CycNum& a, const CycNum& b) {
    std::size_t n = std::max(a.coeff_.size(), b.coeff_.size());
    for (std::size_t i = 0; i < n; ++i) {
      Rat x = i < a.coeff_.size() ? a.coeff_[i] : Rat(0);
      Rat y = i < b.coeff_.size() ? b.coeff_[i] : Rat(0);
      int c = cmp(x, y);
      if (c != 0) return c;
    }
    return 0;
  }
  friend bool operator<(const CycNum& a, const CycNum& b) {
    return compare(a, b) < 0;
  }

  /// Smallest n >= 1 with x^n = 1, or nullopt when no such n exists. Every
  /// root of unity of Q(zeta_N) has order dividing lcm(2, N), so one power
  /// test decides finiteness.
  std::optional<Int> mult_order() const {
    if (is_zero()) throw InvalidArgument("mult_order of zero");
    Int l = field_ ? field_->root_group_order() : 2;
    if (!pow(l).is_one()) return std::nullopt;
    for (Int d : detail::divisors_sorted(l))
      if (pow(d).is_one()) return d;
    throw InternalError("mult_order: no divisor matched");
  }

  /// Expression form accepted back by the parser, e.g. "1/2 - 3*z^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      const Rat& c = coeff_[i];
      if (c == 0) continue;
      Rat abs = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      bool unit_coeff = (abs == 1);
      if (i == 0 || !unit_coeff) os << abs.get_str();
      if (i > 0) {
        if (!unit_coeff) os << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  CycNum(const CycField* f, std::vector<Rat> c) : field_(f), coeff_(std::move(c)) {
    trim(coeff_);
    if (coeff_.empty()) return;  // canonical zero keeps its field pointer
  }

  static CycNum monomial_power(const CycField* f, Int r) {
    if (r < f->degree()) {
      std::vector<Rat> c(r + 1, Rat(0));
      c[r] = 1;
      return CycNum(f, std::move(c));
    }
    CycNum g(f, {Rat(0), Rat(1)});  // unreduced zeta; products reduce
    return g.pow(r);
  }

  static void trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static const CycField* merge_fields(const CycNum& a, const CycNum& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_)
      throw InvalidArgument("mixing elements of different cyclotomic fields");
    return a.field_ ? a.field_ : b.field_;
  }

  static void reduce(const CycField* f, std::vector<Rat>& v) {
    if (!f) {
      trim(v);
      if (v.size() > 1)
        throw InternalError("detached cyclotomic value grew a zeta term");
      return;
    }
    reduce_mod_phi(f, v);
  }

  static void reduce_mod_phi(const CycField* f, std::vector<Rat>& v) {
    Int deg = f->degree();
    for (Int k = static_cast<Int>(v.size()) - 1; k >= deg; --k) {
      Rat c = v[k];
      if (c == 0) continue;
      const auto& row = f->reduction_row(k);
      for (Int i = 0; i < deg; ++i) v[i] += c * row[i];
      v[k] = 0;
    }
    if (static_cast<Int>(v.size()) > deg) v.resize(deg);
    trim(v);
  }

  // divide a by b over Q[x] (b nonzero), returning (quotient, remainder)
  static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(
      std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rat(0));
    Rat lead = b.back();
    for (Int k = static_cast<Int>(q.size()) - 1; k >= 0; --k) {
      Rat c = a[k + b.size() - 1] / lead;
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    }
    a.resize(b.size() - 1);
    trim(a);
    return {q, a};
  }

  static std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                                   const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> p(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    }
    return p;
  }

  const CycField* field_;
  std::vector<Rat> coeff_;
};

/// zeta_N^k over the field of order N (interns the field).
inline CycNum root_of_unity(Int n, Int k) {
  return CycNum::root_of_unity(CycField::get(n), k);
}

}  // namespace hopfgreen
