#include <catch2/catch_amalgamated.hpp>

#include "test_configs.hpp"

using namespace hopfgreen;
using namespace testcfg;

TEST_CASE("character evaluation") {
  auto p = case_iii_z12();  // G = Z/12, a = g^4, chi(g) = zeta_12
  CHECK(p.eps().eval({7}).is_one());
  CHECK(p.chi().eval(p.a()) == CycNum::root_of_unity_order(p.field(), 3, 1));

  auto pi = case_i();  // chi(g) = 2
  CHECK(pi.chi().eval({3}) == CycNum::integer(pi.field(), 8));
}

TEST_CASE("character group operations") {
  auto p = case_iii_z12();
  Character lam = torsion_char(p, {5});
  CHECK(lam * p.eps() == lam);
  CHECK(lam.inv() * lam == p.eps());
  CHECK(p.chi().pow(p.sbar_value()) == p.eps());
  CHECK(p.chi().pow(3) == torsion_char(p, {3}));

  CHECK(p.eps().order() == 1);
  CHECK(p.chi().order() == 12);

  auto pii = case_ii();
  CHECK(!pii.chi().order().has_value());
}

TEST_CASE("case classification") {
  CHECK(classify_case(case_i()) == CaseKind::I);

  auto pii = case_ii();
  CHECK(classify_case(pii) == CaseKind::II);
  CHECK(pii.s_value() == 3);
  CHECK(!pii.sbar_finite());

  auto p = case_iii_z12();
  CHECK(classify_case(p) == CaseKind::III);
  CHECK(p.sbar_value() == 12);
  CHECK(p.s_value() == 3);
  CHECK(p.sprime() == 4);

  // chi(a) = 1 is rejected outright
  CHECK_THROWS_AS(HopfParams::make(GroupSpec{0, {12}}, 12, {0}, {}, {1}),
                  ConfigError);
}

TEST_CASE("derived quantities satisfy the defining identities") {
  for (auto p : {case_iii_s2(), case_iii_s3(), case_iii_s3_sp4(),
                 case_iii_coincide(), case_iii_z24()}) {
    CHECK(p.q() == p.chi_a().inv());
    CHECK(p.q().pow(p.s_value()).is_one());
    CHECK(p.chi().pow(p.sbar_value()) == p.eps());
    CHECK(p.sbar_value() % p.s_value() == 0);
    CHECK(p.sprime() == p.sbar_value() / p.s_value());
    CHECK(p.xi().mult_order() == p.sprime());
  }
}

TEST_CASE("canonical coset representatives") {
  auto p = case_iii_z12();
  Character lam = torsion_char(p, {5});

  Character rep = p.coset_rep(lam);
  CHECK(p.coset_rep(rep) == rep);                  // idempotent
  CHECK(p.coset_rep(p.chi() * lam) == rep);        // orbit-constant

  // <chi> = G^ here, so every character lands on the same representative
  CHECK(p.coset_rep(p.eps()) == p.coset_rep(torsion_char(p, {7})));

  // partition agrees with the relation "lam mu^{-1} in <chi>"
  auto p2 = case_iii_s3();
  Character mu = free_char(p2, {CycNum::integer(p2.field(), 2),
                                CycNum::one(p2.field())});
  for (Int j = 0; j < p2.sbar_value(); ++j) {
    Character shifted = mu * p2.chi().pow(j);
    CHECK(p2.coset_rep(shifted) == p2.coset_rep(mu));
  }
  CHECK(p2.coset_rep(mu) != p2.coset_rep(mu * mu));
}

TEST_CASE("config validation rejects unusable inputs") {
  // torsion order with no faithful values in the session field
  CHECK_THROWS_AS(HopfParams::make(GroupSpec{0, {5}}, 12, {1}, {}, {1}),
                  ConfigError);
  // zero character image
  const CycField* f = CycField::get(4);
  CHECK_THROWS_AS(
      HopfParams::make(GroupSpec{1, {}}, 4, {1}, {CycNum::zero(f)}, {}),
      InvalidArgument);
  CHECK_THROWS_AS(HopfParams::make(GroupSpec{-1, {}}, 4, {}, {}, {}),
                  ConfigError);
}
