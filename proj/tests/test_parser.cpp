#include <catch2/catch_amalgamated.hpp>

#include <hopfgreen/expr.hpp>
#include <hopfgreen/textio.hpp>

#include "test_configs.hpp"

using namespace hopfgreen;
using namespace testcfg;

TEST_CASE("module expressions") {
  auto p = case_iii_z12();  // torsion group, so chr(tor=[...]) applies

  Decomposition d = parse_module_expr(p, "V1(eps)");
  CHECK(d == Decomposition(make_nil(p, 1, p.eps())));

  Decomposition two = parse_module_expr(p, " 2*V3(chr(tor=[1])) + W1(eps; eta=z) ");
  CHECK(two.size() == 2);
  CHECK(two.multiplicity(make_nil(p, 3, torsion_char(p, {1}))) == 2);
  CHECK(two.multiplicity(
            make_nonnil(p, 1, p.eps(), CycNum::root_of_unity(p.field(), 1))) == 1);
  CHECK(two.dim(p) == 2 * 3 + p.sbar_value());

  // printed form parses back to the same multiset
  CHECK(parse_module_expr(p, to_string(two)) == two);
}

TEST_CASE("the parser refuses eta = 0 rather than converting") {
  auto p = case_iii_z12();
  CHECK_THROWS_AS(parse_module_expr(p, "W2(eps; eta=0)"), ParseError);
  CHECK_THROWS_AS(parse_module_expr(p, "W2(eps; eta=1-1)"), ParseError);
}

TEST_CASE("W modules are rejected outside their case") {
  auto p = case_ii();
  CHECK_THROWS_AS(parse_module_expr(p, "W1(eps; eta=1)"), UnsupportedCase);
}

TEST_CASE("parse errors carry positions") {
  auto p = case_iii_z12();
  try {
    parse_module_expr(p, "V3(eps) + Q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
  CHECK_THROWS_AS(parse_module_expr(p, "V3(eps"), ParseError);
  CHECK_THROWS_AS(parse_module_expr(p, "V0(eps)"), InvalidArgument);
  CHECK_THROWS_AS(parse_module_expr(p, "V3(chr(tor=[1,2]))"), ParseError);
}

TEST_CASE("character expressions") {
  auto p = case_iii_s3();  // free rank 2
  Character c = ExprParser(p, "chr(free=[2, z^4])").parse_character();
  CHECK(c == free_char(p, {CycNum::integer(p.field(), 2),
                           CycNum::root_of_unity(p.field(), 4)}));
  CHECK(ExprParser(p, "eps").parse_character() == p.eps());
  CHECK_THROWS_AS(ExprParser(p, "chr(free=[2])").parse_character(), ParseError);
}

TEST_CASE("cyclotomic expression grammar") {
  const CycField* f = CycField::get(12);
  CHECK(parse_cyc(f, "z^12").is_one());
  CHECK(parse_cyc(f, "2^10") == CycNum::integer(f, 1024));
  CHECK(parse_cyc(f, "-(3 - z)*2") == CycNum::integer(f, -6) +
                                          CycNum::root_of_unity(f, 1) *
                                              CycNum::integer(f, 2));
  CHECK(parse_cyc(f, "1/3 * 3").is_one());
  CHECK_THROWS_AS(parse_cyc(f, "1/(1-1)"), ParseError);
  CHECK_THROWS_AS(parse_cyc(f, "z +"), ParseError);
}

TEST_CASE("generator polynomial grammar") {
  auto p = case_iii_s3();
  GenPoly g = parse_genpoly(p, "2*y^2*z - chr(free=[1, z^4])*x[1 + z]");
  CHECK(!g.is_zero());
  // round-trip through the printed form
  CHECK(parse_genpoly(p, to_string(g)) == g);

  GenPoly y2 = parse_genpoly(p, "y*y");
  CHECK(y2 == GenPoly::y(p, 2));

  GenPoly grouped = parse_genpoly(p, "(y + 1)*(y - 1)");
  CHECK(grouped == GenPoly::y(p, 2) - GenPoly::constant(p, 1));

  CHECK_THROWS_AS(parse_genpoly(p, "x[0]"), ParseError);
}

TEST_CASE("printed labels parse back") {
  auto p = case_iii_s3();
  std::vector<Label> labels{
      make_nil(p, 4, free_char(p, {CycNum::integer(p.field(), 2), CycNum::one(p.field())})),
      make_nonnil(p, 2, p.chi(), CycNum::root_of_unity(p.field(), 5)),
  };
  for (const auto& lab : labels) {
    Decomposition d(lab);
    CHECK(parse_module_expr(p, to_string(d)) == d);
  }
}
