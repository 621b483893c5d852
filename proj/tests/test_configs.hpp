#pragma once

#include <hopfgreen/hopfgreen.hpp>

// Shared parameter sets. Naming: s = |chi(a)|, sbar = |chi|.
namespace testcfg {

using namespace hopfgreen;

// |q| infinite: G = Z, a = g, chi(g) = 2.
inline HopfParams case_i() {
  const CycField* f = CycField::get(4);
  return HopfParams::make(GroupSpec{1, {}}, 4, {1}, {CycNum::integer(f, 2)}, {});
}

// |chi| infinite, s = 3: G = Z^2, a = (0,1), chi = (2, zeta_3).
inline HopfParams case_ii() {
  const CycField* f = CycField::get(12);
  return HopfParams::make(
      GroupSpec{2, {}}, 12, {0, 1},
      {CycNum::integer(f, 2), CycNum::root_of_unity_order(f, 3, 1)}, {});
}

// s = 2, sbar = 4, s' = 2, N = 8: G = Z^2, a = (0,1), chi = (i, -1).
inline HopfParams case_iii_s2() {
  const CycField* f = CycField::get(8);
  return HopfParams::make(
      GroupSpec{2, {}}, 8, {0, 1},
      {CycNum::root_of_unity_order(f, 4, 1), CycNum::integer(f, -1)}, {});
}

// s = 3, sbar = 6, s' = 2, N = 12: G = Z^2, a = (0,1), chi = (-1, zeta_3).
inline HopfParams case_iii_s3() {
  const CycField* f = CycField::get(12);
  return HopfParams::make(
      GroupSpec{2, {}}, 12, {0, 1},
      {CycNum::integer(f, -1), CycNum::root_of_unity_order(f, 3, 1)}, {});
}

// s = 3, sbar = 12, s' = 4, N = 12: G = Z^2, a = (0,1), chi = (i, zeta_3).
inline HopfParams case_iii_s3_sp4() {
  const CycField* f = CycField::get(12);
  return HopfParams::make(
      GroupSpec{2, {}}, 12, {0, 1},
      {CycNum::root_of_unity_order(f, 4, 1), CycNum::root_of_unity_order(f, 3, 1)},
      {});
}

// s = sbar = 3, s' = 1, N = 3: G = Z^2, a = (0,1), chi = (zeta_3, zeta_3).
inline HopfParams case_iii_coincide() {
  const CycField* f = CycField::get(3);
  CycNum z3 = CycNum::root_of_unity(f, 1);
  return HopfParams::make(GroupSpec{2, {}}, 3, {0, 1}, {z3, z3}, {});
}

// G = Z/24, a = g, chi(g) = zeta_12: s = sbar = 12, s' = 1, N = 24.
inline HopfParams case_iii_z24() {
  return HopfParams::make(GroupSpec{0, {24}}, 24, {1}, {}, {2});
}

// G = Z/12, a = g^4, chi(g) = zeta_12: s = 3, sbar = 12, s' = 4.
inline HopfParams case_iii_z12() {
  return HopfParams::make(GroupSpec{0, {12}}, 12, {4}, {}, {1});
}

inline Character free_char(const HopfParams& p, std::vector<CycNum> images) {
  return Character(p.group(), p.field(), std::move(images), {});
}

inline Character torsion_char(const HopfParams& p, std::vector<Int> exps) {
  return Character(p.group(), p.field(), {}, std::move(exps));
}

}  // namespace testcfg
