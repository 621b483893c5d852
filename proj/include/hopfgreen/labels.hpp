#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <hopfgreen/hopf.hpp>

namespace hopfgreen {

/// Isomorphism class of the nilpotent-type indecomposable V_t(lambda):
/// t-dimensional, x acts as the nilpotent shift, top weight lambda.
struct NilLabel {
  Int t = 0;
  Character lambda;
};

/// Isomorphism class of the non-nilpotent-type indecomposable V_t(sigma, beta)
/// (dimension t*sbar). The class is (t, [sigma], beta); sigma is stored as the
/// canonical coset representative. A chosen s'-th root eta of beta is carried
/// along so that later alpha-grid computations stay exact; eta never enters
/// equality or ordering.
struct NonNilLabel {
  Int t = 0;
  Character sigma;
  CycNum beta;
  CycNum eta;
};

using Label = std::variant<NilLabel, NonNilLabel>;

inline Label make_nil(const HopfParams& p, Int t, Character lambda) {
  if (t < 1) throw InvalidArgument("module dimension parameter t must be >= 1");
  (void)p;
  return NilLabel{t, std::move(lambda)};
}

inline Label make_nonnil(const HopfParams& p, Int t, const Character& sigma,
                         const CycNum& eta) {
  if (p.kind() != CaseKind::III)
    throw UnsupportedCase(
        "non-nilpotent indecomposables exist only when |chi| is finite");
  if (t < 1) throw InvalidArgument("module dimension parameter t must be >= 1");
  if (eta.is_zero())
    throw InvalidArgument(
        "beta = 0 is not a non-nilpotent class; V_t(sigma, 0) is the "
        "nilpotent module of dimension t*sbar");
  CycNum beta = eta.pow(p.sprime());
  return NonNilLabel{t, p.coset_rep(sigma), beta, eta};
}

inline Int label_dim(const HopfParams& p, const Label& lab) {
  if (const auto* nil = std::get_if<NilLabel>(&lab)) return nil->t;
  return std::get<NonNilLabel>(lab).t * p.sbar_value();
}

/// Canonical total order: nilpotent labels first, then by (t, character) and
/// for non-nilpotent labels (t, [sigma], beta). eta is payload, not identity.
inline int compare(const Label& a, const Label& b) {
  int ka = a.index(), kb = b.index();
  if (ka != kb) return ka < kb ? -1 : 1;
  if (ka == 0) {
    const auto& x = std::get<NilLabel>(a);
    const auto& y = std::get<NilLabel>(b);
    if (x.t != y.t) return x.t < y.t ? -1 : 1;
    return compare(x.lambda, y.lambda);
  }
  const auto& x = std::get<NonNilLabel>(a);
  const auto& y = std::get<NonNilLabel>(b);
  if (x.t != y.t) return x.t < y.t ? -1 : 1;
  int c = compare(x.sigma, y.sigma);
  if (c != 0) return c;
  return compare(x.beta, y.beta);
}

inline bool operator==(const Label& a, const Label& b) {
  return compare(a, b) == 0;
}

struct LabelLess {
  bool operator()(const Label& a, const Label& b) const {
    return compare(a, b) < 0;
  }
};

using LabelMap = std::map<Label, Int, LabelLess>;

/// Finite multiset of labels with positive multiplicities; the result type of
/// every tensor decomposition.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(const Label& lab, Int mult = 1) { add(lab, mult); }

  void add(const Label& lab, Int mult) {
    if (mult == 0) return;
    Int& m = terms_[lab];
    m += mult;
    if (m == 0) {
      terms_.erase(lab);
    } else if (m < 0) {
      throw InvalidArgument("decomposition multiplicities must be nonnegative");
    }
  }

  Decomposition& operator+=(const Decomposition& other) {
    for (const auto& [lab, m] : other.terms_) add(lab, m);
    return *this;
  }

  friend Decomposition operator+(Decomposition a, const Decomposition& b) {
    a += b;
    return a;
  }

  Decomposition scaled(Int k) const {
    if (k < 0) throw InvalidArgument("decomposition scale must be nonnegative");
    Decomposition out;
    if (k == 0) return out;
    for (const auto& [lab, m] : terms_) out.add(lab, m * k);
    return out;
  }

  Int dim(const HopfParams& p) const {
    Int d = 0;
    for (const auto& [lab, m] : terms_) d += m * label_dim(p, lab);
    return d;
  }

  Int multiplicity(const Label& lab) const {
    auto it = terms_.find(lab);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const LabelMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt) {
      if (it->second != jt->second || compare(it->first, jt->first) != 0)
        return false;
    }
    return true;
  }
  friend bool operator!=(const Decomposition& a, const Decomposition& b) {
    return !(a == b);
  }

 private:
  LabelMap terms_;
};

}  // namespace hopfgreen
