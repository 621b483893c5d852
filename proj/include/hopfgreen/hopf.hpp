#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hopfgreen/character.hpp>
#include <hopfgreen/group.hpp>

namespace hopfgreen {

/// Classification of the input datum (G, a, chi) by the orders s = |chi(a)|
/// and sbar = |chi|:
///   I:   s = sbar = infinity
///   II:  s < sbar = infinity
///   III: sbar < infinity (then s | sbar and s' = sbar/s)
enum class CaseKind { I, II, III };

inline const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::I: return "I";
    case CaseKind::II: return "II";
    case CaseKind::III: return "III";
  }
  return "?";
}

/// The full input datum of H = kG(chi^{-1}, a, 0) together with the derived
/// quantities q = chi(a)^{-1}, s, sbar, s' and the fixed primitive s'-th root
/// of unity xi. Immutable after construction; all operations are pure.
class HopfParams {
 public:
  static HopfParams make(GroupSpec group_spec, Int cyclotomic_order,
                         GroupElement a, std::vector<CycNum> chi_free,
                         std::vector<Int> chi_torsion) {
    group_spec.validate();
    auto group = std::make_shared<const GroupSpec>(std::move(group_spec));
    const CycField* field = CycField::get(cyclotomic_order);
    Character chi(group, field, std::move(chi_free), std::move(chi_torsion));
    return HopfParams(group, field, group->reduce(std::move(a)), std::move(chi));
  }

  const GroupPtr& group() const { return group_; }
  const CycField* field() const { return field_; }
  const GroupElement& a() const { return a_; }
  const Character& chi() const { return chi_; }
  const Character& chi_inv() const { return chi_inv_; }
  const Character& eps() const { return eps_; }
  const CycNum& chi_a() const { return chi_a_; }
  const CycNum& q() const { return q_; }

  /// |q| = |chi(a)|; nullopt means infinite.
  const std::optional<Int>& s() const { return s_; }
  /// |chi|; nullopt means infinite.
  const std::optional<Int>& sbar() const { return sbar_; }
  /// sbar/s, only meaningful in case III.
  Int sprime() const {
    require_case_iii("sprime");
    return sprime_;
  }
  /// Fixed primitive s'-th root of unity (case III).
  const CycNum& xi() const {
    require_case_iii("xi");
    return xi_;
  }
  CaseKind kind() const { return kind_; }

  bool s_finite() const { return s_.has_value(); }
  bool sbar_finite() const { return sbar_.has_value(); }
  Int s_value() const {
    if (!s_) throw UnsupportedCase("s is infinite for these parameters");
    return *s_;
  }
  Int sbar_value() const {
    if (!sbar_) throw UnsupportedCase("sbar is infinite for these parameters");
    return *sbar_;
  }

  /// Canonical representative of the coset [lam] in G^ / <chi>: the minimum
  /// of {lam chi^j : 0 <= j < sbar} in the fixed character order. Identity
  /// map when sbar is infinite (cosets are then never used for labels).
  Character coset_rep(const Character& lam) const {
    if (!sbar_) return lam;
    Character best = lam;
    Character cur = lam;
    for (Int j = 1; j < *sbar_; ++j) {
      cur = cur * chi_;
      if (compare(cur, best) < 0) best = cur;
    }
    return best;
  }

  bool same_coset(const Character& a, const Character& b) const {
    return coset_rep(a) == coset_rep(b);
  }

  CycNum eval_at_a(const Character& lam) const { return lam.eval(a_); }

 private:
  HopfParams(GroupPtr group, const CycField* field, GroupElement a, Character chi)
      : group_(std::move(group)),
        field_(field),
        a_(std::move(a)),
        chi_(std::move(chi)),
        chi_inv_(chi_.inv()),
        eps_(Character::trivial(group_, field_)),
        chi_a_(chi_.eval(a_)) {
    if (chi_a_.is_one())
      throw ConfigError("chi(a) = 1 is excluded: x would be central");
    q_ = chi_a_.inv();
    s_ = q_.mult_order();
    sbar_ = chi_.order();
    if (sbar_) {
      if (!s_ || *sbar_ % *s_ != 0)
        throw InternalError("order of chi(a) must divide the order of chi");
      sprime_ = *sbar_ / *s_;
      if (field_->root_group_order() % sprime_ != 0)
        throw ConfigError("s' = " + std::to_string(sprime_) +
                          " does not divide lcm(2, N); xi is not in the field");
      xi_ = CycNum::root_of_unity_order(field_, sprime_, 1);
      kind_ = CaseKind::III;
    } else {
      kind_ = s_ ? CaseKind::II : CaseKind::I;
    }
  }

  void require_case_iii(const char* what) const {
    if (kind_ != CaseKind::III)
      throw UnsupportedCase(std::string(what) + " requires |chi| < infinity");
  }

  GroupPtr group_;
  const CycField* field_;
  GroupElement a_;
  Character chi_, chi_inv_, eps_;
  CycNum chi_a_, q_;
  std::optional<Int> s_, sbar_;
  Int sprime_ = 1;
  CycNum xi_;
  CaseKind kind_;
};

inline CaseKind classify_case(const HopfParams& p) { return p.kind(); }

}  // namespace hopfgreen
