#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <hopfgreen/cyclotomic.hpp>
#include <hopfgreen/group.hpp>

namespace hopfgreen {

/// Character of a finitely generated abelian group with values in
/// Q(zeta_N)^x: an arbitrary nonzero image per free generator, and an
/// exponent e_i per torsion generator meaning zeta_{n_i}^{e_i}.
class Character {
 public:
  Character() = default;

  Character(GroupPtr group, const CycField* field, std::vector<CycNum> free_images,
            std::vector<Int> torsion_exp)
      : group_(std::move(group)),
        field_(field),
        free_img_(std::move(free_images)),
        tor_exp_(std::move(torsion_exp)) {
    if (static_cast<Int>(free_img_.size()) != group_->free_rank ||
        free_img_.size() + tor_exp_.size() !=
            static_cast<std::size_t>(group_->num_generators()))
      throw InvalidArgument("character arity does not match the group");
    for (const auto& v : free_img_)
      if (v.is_zero()) throw InvalidArgument("character images must be nonzero");
    for (std::size_t i = 0; i < tor_exp_.size(); ++i) {
      Int n = group_->torsion[i];
      if (field_->root_group_order() % n != 0)
        throw ConfigError("torsion order " + std::to_string(n) +
                          " has no faithful character values in Q(zeta_" +
                          std::to_string(field_->order()) + ")");
      tor_exp_[i] = ((tor_exp_[i] % n) + n) % n;
    }
  }

  static Character trivial(GroupPtr group, const CycField* field) {
    std::vector<CycNum> free_img(group->free_rank, CycNum::one(field));
    std::vector<Int> tor(group->torsion.size(), 0);
    return Character(std::move(group), field, std::move(free_img), std::move(tor));
  }

  const GroupPtr& group() const { return group_; }
  const CycField* field() const { return field_; }
  const std::vector<CycNum>& free_images() const { return free_img_; }
  const std::vector<Int>& torsion_exponents() const { return tor_exp_; }

  bool is_trivial() const {
    for (const auto& v : free_img_)
      if (!v.is_one()) return false;
    for (Int e : tor_exp_)
      if (e != 0) return false;
    return true;
  }

  CycNum eval(const GroupElement& g) const {
    group_->check_arity(g);
    CycNum acc = CycNum::one(field_);
    for (std::size_t i = 0; i < free_img_.size(); ++i)
      if (g[i] != 0) acc = acc * free_img_[i].pow(g[i]);
    for (std::size_t i = 0; i < tor_exp_.size(); ++i) {
      Int n = group_->torsion[i];
      Int e = tor_exp_[i] * g[group_->free_rank + i];
      if (e % n != 0) acc = acc * CycNum::root_of_unity_order(field_, n, e);
    }
    return acc;
  }

  /// Image of the i-th generator.
  CycNum generator_image(Int i) const {
    if (i < group_->free_rank) return free_img_[i];
    Int j = i - group_->free_rank;
    return CycNum::root_of_unity_order(field_, group_->torsion[j], tor_exp_[j]);
  }

  friend Character operator*(const Character& a, const Character& b) {
    a.check_compatible(b);
    std::vector<CycNum> img(a.free_img_.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = a.free_img_[i] * b.free_img_[i];
    std::vector<Int> tor(a.tor_exp_.size());
    for (std::size_t i = 0; i < tor.size(); ++i)
      tor[i] = a.tor_exp_[i] + b.tor_exp_[i];
    return Character(a.group_, a.field_, std::move(img), std::move(tor));
  }

  Character inv() const {
    std::vector<CycNum> img(free_img_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = free_img_[i].inv();
    std::vector<Int> tor(tor_exp_.size());
    for (std::size_t i = 0; i < tor.size(); ++i) tor[i] = -tor_exp_[i];
    return Character(group_, field_, std::move(img), std::move(tor));
  }

  Character pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    Character acc = trivial(group_, field_);
    Character base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const Character& a, const Character& b) {
    a.check_compatible(b);
    return a.free_img_ == b.free_img_ && a.tor_exp_ == b.tor_exp_;
  }
  friend bool operator!=(const Character& a, const Character& b) {
    return !(a == b);
  }

  /// Fixed total order (lexicographic on the serialized images); this is the
  /// order that picks canonical coset representatives.
  friend int compare(const Character& a, const Character& b) {
    a.check_compatible(b);
    for (std::size_t i = 0; i < a.free_img_.size(); ++i) {
      int c = compare(a.free_img_[i], b.free_img_[i]);
      if (c != 0) return c;
    }
    for (std::size_t i = 0; i < a.tor_exp_.size(); ++i) {
      if (a.tor_exp_[i] != b.tor_exp_[i])
        return a.tor_exp_[i] < b.tor_exp_[i] ? -1 : 1;
    }
    return 0;
  }

  /// Order in the character group: lcm of the component orders, nullopt when
  /// some free image is not a root of unity.
  std::optional<Int> order() const {
    Int l = 1;
    for (const auto& v : free_img_) {
      auto o = v.mult_order();
      if (!o) return std::nullopt;
      l = std::lcm(l, *o);
    }
    for (std::size_t i = 0; i < tor_exp_.size(); ++i) {
      Int n = group_->torsion[i];
      Int o = n / std::gcd(n, tor_exp_[i] == 0 ? n : tor_exp_[i]);
      l = std::lcm(l, o);
    }
    return l;
  }

 private:
  void check_compatible(const Character& b) const {
    if (!group_ || !b.group_ || *group_ != *b.group_ || field_ != b.field_)
      throw InvalidArgument("characters belong to different groups or fields");
  }

  GroupPtr group_;
  const CycField* field_ = nullptr;
  std::vector<CycNum> free_img_;
  std::vector<Int> tor_exp_;
};

struct CharacterLess {
  bool operator()(const Character& a, const Character& b) const {
    return compare(a, b) < 0;
  }
};

}  // namespace hopfgreen
