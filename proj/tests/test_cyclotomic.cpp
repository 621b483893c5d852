#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <hopfgreen/cyclotomic.hpp>
#include <hopfgreen/expr.hpp>
#include <hopfgreen/qcombinatorics.hpp>

using namespace hopfgreen;

namespace {

CycNum random_elem(const CycField* f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  CycNum v = CycNum::zero(f);
  for (Int i = 0; i < f->degree(); ++i)
    v = v + CycNum::integer(f, coeff(rng)) * CycNum::root_of_unity(f, i);
  return v;
}

}  // namespace

TEST_CASE("roots of unity in canonical form") {
  CHECK(root_of_unity(4, 2) == CycNum::integer(CycField::get(4), -1));
  CHECK(root_of_unity(1, 0).is_one());

  // zeta_12^4 is the canonical embedding of zeta_3: its minimal polynomial
  // x^2 + x + 1 must vanish
  CycNum z = root_of_unity(12, 4);
  CHECK((z * z + z + CycNum::one(z.field())).is_zero());

  // canonical reduction makes different construction routes equal:
  // zeta_6^2 = zeta_6 - 1
  CycNum z6 = root_of_unity(6, 1);
  CHECK(z6 * z6 == z6 - CycNum::one(z6.field()));
}

TEST_CASE("field arithmetic basics") {
  const CycField* f = CycField::get(3);
  CycNum z3 = root_of_unity(3, 1);
  CHECK(z3 * z3.pow(2) == CycNum::one(f));
  CHECK((z3 + z3 * z3 + CycNum::one(f)).is_zero());
  CHECK(CycNum::integer(f, 2).pow(5) == CycNum::integer(f, 32));
  CHECK_THROWS_AS(CycNum::zero(f).inv(), DivisionByZero);
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(7);
  for (Int n : {5, 8, 12}) {
    const CycField* f = CycField::get(n);
    for (int iter = 0; iter < 25; ++iter) {
      CycNum a = random_elem(f, rng), b = random_elem(f, rng),
             c = random_elem(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inv() == CycNum::one(f));
    }
  }
}

TEST_CASE("multiplicative orders") {
  CHECK(root_of_unity(3, 1).mult_order() == 3);
  CHECK(!CycNum::integer(CycField::get(3), 2).mult_order().has_value());

  // brute force confirms |-zeta_3| = 6: no smaller power is 1
  CycNum v = -root_of_unity(3, 1);
  Int first = 0;
  CycNum acc = CycNum::one(v.field());
  for (Int k = 1; k <= 12 && first == 0; ++k) {
    acc = acc * v;
    if (acc.is_one()) first = k;
  }
  CHECK(first == 6);
  CHECK(v.mult_order() == first);

  CHECK_THROWS_AS(CycNum::zero(CycField::get(3)).mult_order(), InvalidArgument);
}

TEST_CASE("order of every root of unity") {
  for (Int n : {4, 9, 12}) {
    for (Int k = 0; k < n; ++k) {
      auto o = root_of_unity(n, k).mult_order();
      REQUIRE(o.has_value());
      CHECK(*o == n / std::gcd(n, k == 0 ? n : k));
    }
  }
}

TEST_CASE("expression text round-trips") {
  std::mt19937_64 rng(11);
  const CycField* f = CycField::get(12);
  for (int iter = 0; iter < 20; ++iter) {
    CycNum v = random_elem(f, rng);
    CHECK(parse_cyc(f, v.to_string()) == v);
  }
  CHECK(parse_cyc(f, "(1+z)^2 - z^2 - 2*z").is_one());
  CHECK(parse_cyc(f, "1/2 + 1/2").is_one());
}

TEST_CASE("q-combinatorics") {
  const CycField* f = CycField::get(12);
  CycNum one = CycNum::one(f);
  CHECK(q_number(3, one) == CycNum::integer(f, 3));
  CHECK(q_number(0, one).is_zero());

  CycNum q = root_of_unity(12, 1);
  for (Int n = 0; n <= 6; ++n) {
    CHECK(q_binom(n, 0, q).is_one());
    CHECK(q_binom(n, n, q).is_one());
  }
  CHECK(q_binom(4, 2, CycNum::integer(f, -1)) == CycNum::integer(f, 2));
  CHECK_THROWS_AS(q_binom(3, 4, q), InvalidArgument);
}

TEST_CASE("q-binomial agrees with the factorial quotient when defined") {
  std::mt19937_64 rng(3);
  const CycField* f = CycField::get(12);
  std::vector<CycNum> qs{CycNum::integer(f, 2), root_of_unity(12, 1),
                         root_of_unity(12, 5), CycNum::rational(f, Rat(1, 2))};
  for (const auto& q : qs) {
    for (Int n = 1; n <= 6; ++n) {
      if (q_factorial(n - 1, q).is_zero()) continue;
      for (Int i = 0; i <= n; ++i) {
        CycNum lhs = q_binom(n, i, q);
        CycNum rhs =
            q_factorial(n, q) / (q_factorial(i, q) * q_factorial(n - i, q));
        CHECK(lhs == rhs);
      }
    }
  }
}
