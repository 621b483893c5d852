#include <catch2/catch_amalgamated.hpp>

#include <hopfgreen/oracle.hpp>

#include "test_configs.hpp"

using namespace hopfgreen;
using namespace testcfg;

TEST_CASE("nilpotent-type construction") {
  auto p = case_iii_s3();
  Character lam = free_char(p, {CycNum::integer(p.field(), 2), CycNum::one(p.field())});

  MatrixRep one = build_nil(p, 1, lam);
  CHECK(one.dim == 1);
  CHECK(one.xmat.at(0, 0).is_zero());
  CHECK(one.gmats[0].at(0, 0) == lam.eval(p.group()->generator(0)));

  MatrixRep two = build_nil(p, 2, p.eps());
  CHECK(two.weights[0] == p.eps());
  CHECK(two.weights[1] == p.chi());
  CHECK(two.xmat.at(1, 0).is_one());
  CHECK(two.xmat.at(0, 1).is_zero());

  for (Int t : {1, 3, 5}) CHECK(rep_check(p, build_nil(p, t, lam)));
}

TEST_CASE("x on the nilpotent type has nilpotency index exactly t") {
  auto p = case_iii_s2();
  for (Int t : {1, 2, 4}) {
    MatrixRep rep = build_nil(p, t, p.chi());
    Matrix xt = t > 1 ? matpow(rep.xmat, t - 1) : Matrix::identity(1, p.field());
    CHECK(!xt.is_zero());
    CHECK((xt * rep.xmat).is_zero());
  }
}

TEST_CASE("non-nilpotent-type construction") {
  auto p = case_iii_s3();
  Int sbar = p.sbar_value();
  CycNum beta = CycNum::root_of_unity(p.field(), 1);
  CycNum eta = beta;  // s' = 2: beta = eta^2
  beta = eta.pow(p.sprime());

  MatrixRep w1 = build_nonnil(p, 1, p.eps(), eta);
  CHECK(w1.dim == sbar);
  CHECK(w1.xmat.at(0, sbar - 1) == beta);  // x m_{sbar-1} = beta m_0
  CHECK(rep_check(p, w1));
  CHECK(rank(w1.xmat) == w1.dim);  // x acts invertibly

  MatrixRep w2 = build_nonnil(p, 2, p.eps(), eta);
  CHECK(w2.dim == 2 * sbar);
  CHECK(w2.xmat.at(0, 2 * sbar - 1) == -(beta * beta));   // a_0 = -beta^2
  CHECK(w2.xmat.at(sbar, 2 * sbar - 1) == beta + beta);   // a_1 = 2 beta
  CHECK(rep_check(p, w2));
  CHECK(rank(w2.xmat) == w2.dim);

  CHECK_THROWS_AS(build_nonnil(case_ii(), 1, case_ii().eps(),
                               CycNum::one(case_ii().field())),
                  UnsupportedCase);
}

TEST_CASE("rep_check rejects broken representations") {
  auto p = case_iii_s3();
  MatrixRep rep = build_nil(p, 3, p.eps());
  rep.xmat = Matrix::identity(3, p.field());  // not weight-graded
  CHECK(!rep_check(p, rep));

  MatrixRep rep2 = build_nil(p, 2, p.eps());
  rep2.gmats[0].at(0, 1) = CycNum::one(p.field());  // not diagonal
  CHECK(!rep_check(p, rep2));
}

TEST_CASE("tensor of representations") {
  auto p = case_iii_s3();
  Character lam = free_char(p, {CycNum::integer(p.field(), 2), CycNum::one(p.field())});
  Character sig = free_char(p, {CycNum::one(p.field()), CycNum::root_of_unity(p.field(), 1)});

  MatrixRep t11 = tensor_rep(p, build_nil(p, 1, lam), build_nil(p, 1, sig));
  CHECK(t11.dim == 1);
  CHECK(t11.xmat.at(0, 0).is_zero());
  CHECK(t11.weights[0] == lam * sig);

  MatrixRep t23 = tensor_rep(p, build_nil(p, 2, p.eps()), build_nil(p, 3, p.eps()));
  CHECK(t23.dim == 6);
  CHECK(rep_check(p, t23));

  MatrixRep tw = tensor_rep(p, build_nil(p, 2, lam),
                            build_nonnil(p, 1, sig, CycNum::one(p.field())));
  CHECK(tw.dim == 2 * p.sbar_value());
  CHECK(rep_check(p, tw));
}

TEST_CASE("labels identify isomorphism classes") {
  auto p = case_iii_s3();
  CycNum eta = CycNum::root_of_unity(p.field(), 1);
  Character sig = free_char(p, {CycNum::integer(p.field(), 2), CycNum::one(p.field())});

  // eta is payload: multiplying it by a power of xi leaves the class fixed
  CHECK(make_nonnil(p, 2, sig, eta) == make_nonnil(p, 2, sig, eta * p.xi()));
  // beta = 0 is not a non-nilpotent class
  CHECK_THROWS_AS(make_nonnil(p, 1, sig, CycNum::zero(p.field())),
                  InvalidArgument);

  // V_t(sigma, beta) and V_t(chi sigma, beta) realize the same class: the
  // oracle sends both representations to the same canonical label
  Label lab = make_nonnil(p, 2, sig, eta);
  EigenPool pool;
  pool.add_labels(Decomposition(lab));
  Decomposition d1 = oracle_decompose(p, build_nonnil(p, 2, sig, eta), pool);
  Decomposition d2 =
      oracle_decompose(p, build_nonnil(p, 2, p.chi() * sig, eta), pool);
  CHECK(d1 == d2);
  CHECK(d1 == Decomposition(lab));
}

TEST_CASE("decomposition arithmetic") {
  auto p = case_iii_s3();
  Decomposition d;
  CHECK(d.empty());
  d.add(make_nil(p, 3, p.eps()), 2);
  CHECK(d.dim(p) == 6);
  CHECK((Decomposition() + d) == d);
  CHECK(d.scaled(0).empty());
  CHECK(d.scaled(3).dim(p) == 18);
  CHECK_THROWS_AS(d.add(make_nil(p, 3, p.eps()), -5), InvalidArgument);

  Decomposition w;
  w.add(make_nonnil(p, 1, p.eps(), CycNum::one(p.field())), 1);
  CHECK(w.dim(p) == p.sbar_value());
}
