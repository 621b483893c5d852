#pragma once

#include <memory>
#include <vector>

#include <hopfgreen/errors.hpp>

namespace hopfgreen {

using Int = long;
using GroupElement = std::vector<Int>;

/// Finitely generated abelian group Z^r x Z/n_1 x ... x Z/n_k, elements as
/// exponent vectors on the generators with torsion coordinates reduced into
/// [0, n_i).
struct GroupSpec {
  Int free_rank = 0;
  std::vector<Int> torsion;

  Int num_generators() const {
    return free_rank + static_cast<Int>(torsion.size());
  }

  GroupElement reduce(GroupElement g) const {
    check_arity(g);
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      Int n = torsion[i];
      Int& c = g[free_rank + i];
      c = ((c % n) + n) % n;
    }
    return g;
  }

  GroupElement identity() const {
    return GroupElement(num_generators(), 0);
  }

  GroupElement generator(Int i) const {
    GroupElement g(num_generators(), 0);
    g[i] = 1;
    return g;
  }

  GroupElement mul(GroupElement a, const GroupElement& b) const {
    check_arity(a);
    check_arity(b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return reduce(std::move(a));
  }

  void check_arity(const GroupElement& g) const {
    if (static_cast<Int>(g.size()) != num_generators())
      throw InvalidArgument("group element has wrong number of coordinates");
  }

  void validate() const {
    if (free_rank < 0) throw ConfigError("free rank must be nonnegative");
    for (Int n : torsion)
      if (n < 2) throw ConfigError("torsion orders must be >= 2");
  }

  bool operator==(const GroupSpec&) const = default;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

}  // namespace hopfgreen
