#include <gtest/gtest.h>

#include "ncfactor/als.hpp"
#include "ncfactor/als_io.hpp"
#include "ncfactor/errors.hpp"
#include "ncfactor/hankel.hpp"
#include "test_support.hpp"

using namespace ncfactor;
using ncfactor::testing::als_rows;
using ncfactor::testing::P;
using ncfactor::testing::PolyGen;
using ncfactor::testing::xyz;

namespace {

PreStandardAls ps(const Als& a) { return PreStandardAls(a); }

const Als& als_x() {
  static const Als a = als_rows({{"1", "-x"}, {".", "1"}}, {".", "1"});
  return a;
}

// 1 - y*x in the form used by the minimal multiplication example.
const Als& als_one_minus_yx() {
  static const Als a = als_rows({{"1", "y", "-1"}, {".", "1", "-x"}, {".", ".", "1"}}, {".", ".", "1"});
  return a;
}

const Als& minmul_result() {
  static const Als a = als_rows(
      {{"1", "-x", ".", "."}, {".", "1", "y", "-1"}, {".", ".", "1", "-x"}, {".", ".", ".", "1"}}, {".", ".", ".", "1"});
  return a;
}

Word w(std::initializer_list<LetterIndex> l) { return Word(l); }

}  // namespace

TEST(Als, Construction) {
  EXPECT_THROW(Als(xyz(), {RationalMatrix(2, 2)}, RationalVector(2)), InvalidAls);  // needs d+1 matrices
  Als a(xyz(), 3);
  EXPECT_EQ(a.pencil_size(), 4U);
  EXPECT_FALSE(a.is_unit_upper_triangular());
  EXPECT_THROW(PreStandardAls{a}, InvalidAls);
  EXPECT_EQ(PreStandardAls::zero(xyz()).dim(), 0U);
  EXPECT_THROW(a.set_entry(0, 1, P("x*y")), InvalidAls);
}

TEST(Als, PreStandardShape) {
  EXPECT_TRUE(minmul_result().is_pre_standard());
  Als lower = minmul_result();
  lower.set_entry(2, 1, P("x"));
  EXPECT_FALSE(lower.is_unit_upper_triangular());
  Als diag = minmul_result();
  diag.set_entry(1, 1, P("1 + y"));
  EXPECT_FALSE(diag.is_unit_upper_triangular());
  Als rhs = minmul_result();
  rhs.v()[1] = 1;
  EXPECT_TRUE(rhs.is_unit_upper_triangular());
  EXPECT_FALSE(rhs.is_pre_standard());
}

TEST(AlsSolve, Examples) {
  EXPECT_EQ(als_solve(ps(minmul_result())), P("x - x*y*x"));
  EXPECT_EQ(als_solve(ps(als_constant(xyz(), Rational(7, 2)))), P("7/2"));
  const auto left = companion_left({P("x"), P("x"), P("x")}, {-30, 31, -10});
  EXPECT_EQ(als_solve(left), P("x^3 - 10*x^2 + 31*x - 30"));
  EXPECT_EQ(als_solve(PreStandardAls::zero(xyz())), P("0"));
}

TEST(AlsSolve, AgreesWithNeumannEvaluation) {
  EXPECT_EQ(als_evaluate(minmul_result()), P("x - x*y*x"));
  const Als s51 = als_rows({{"1", "-x", ".", ".", "-1", "."},
                            {".", "1", "-y", ".", ".", "."},
                            {".", ".", "1", "-x", ".", "."},
                            {".", ".", ".", "1", ".", "."},
                            {".", ".", ".", ".", "1", "-x"},
                            {".", ".", ".", ".", ".", "1"}},
                           {".", ".", ".", "-4", ".", "3"});
  EXPECT_EQ(als_evaluate(s51), P("3*x - 4*x*y*x"));
  EXPECT_EQ(left_family(s51).front(), P("3*x - 4*x*y*x"));
}

TEST(AlsScale, Examples) {
  EXPECT_EQ(als_solve(ps(als_scale(als_x(), 3))), P("3*x"));
  EXPECT_EQ(als_scale(als_x(), 1), als_x());
  EXPECT_EQ(als_solve(ps(als_scale(minmul_result(), -4))), poly_scale(-4, P("x - x*y*x")));
  EXPECT_EQ(als_scale(als_x(), 0).dim(), 0U);
}

TEST(AlsAdd, SumOfMonomialSystems) {
  // -x*y + (x*y + z): the six-dimensional almost pre-standard system.
  const Als xy_plus_z = als_rows({{"1", "-x", "-z"}, {".", "1", "-y"}, {".", ".", "1"}}, {".", ".", "1"});
  const Als sum = als_add(als_monomial(xyz(), w({0, 1}), -1), xy_plus_z);
  const Als min0 = als_rows({{"1", "-x", ".", "-1", ".", "."},
                             {".", "1", "-y", ".", ".", "."},
                             {".", ".", "1", ".", ".", "."},
                             {".", ".", ".", "1", "-x", "-z"},
                             {".", ".", ".", ".", "1", "-y"},
                             {".", ".", ".", ".", ".", "1"}},
                            {".", ".", "-1", ".", ".", "1"});
  EXPECT_EQ(sum, min0);
  EXPECT_EQ(als_solve(pre_standardize(sum)), P("z"));

  EXPECT_EQ(als_add(als_x(), Als(xyz(), 0)), als_x());
  const Als s51 = als_add(als_monomial(xyz(), w({0, 1, 0}), -4), als_monomial(xyz(), w({0}), 3));
  EXPECT_EQ(s51.dim(), 6U);
  EXPECT_EQ(s51.v()[3], Rational(-4));
  EXPECT_EQ(als_solve(pre_standardize(s51)), P("3*x - 4*x*y*x"));
  EXPECT_THROW(als_add(als_x(), als_constant(Alphabet({"a"}), 1)), AlphabetMismatch);
}

TEST(AlsMul, Examples) {
  const Als prod = als_mul(als_x(), als_one_minus_yx());
  EXPECT_EQ(prod.dim(), 5U);
  EXPECT_TRUE(prod.is_pre_standard());
  EXPECT_EQ(prod.coefficient(0)(1, 2), Rational(-1));  // -v_x coupling
  EXPECT_EQ(als_solve(ps(prod)), P("x - x*y*x"));
  EXPECT_EQ(als_solve(ps(als_mul(als_x(), als_constant(xyz(), 1)))), P("x"));
  const auto f = als_from_poly(P("x*y*x - x")), g = als_from_poly(P("y*x - 3"));
  EXPECT_EQ(als_solve(ps(als_mul(f.als(), g.als()))), P("x*y*x*y*x - 4*x*y*x + 3*x"));
}

TEST(AlsMinimalMul, ReproducesPrintedSystem) {
  const auto m = als_minimal_mul(ps(als_x()), ps(als_one_minus_yx()));
  EXPECT_EQ(m.als(), minmul_result());
  for (std::size_t j = 2; j < 4; ++j) EXPECT_TRUE(m.als().entry_is_zero(0, j));  // 1x2 zero block
  EXPECT_TRUE(is_minimal(m.als()));
}

TEST(AlsMinimalMul, Square) {
  const auto m = als_minimal_mul(ps(als_x()), ps(als_x()));
  EXPECT_EQ(m.dim(), 3U);
  EXPECT_EQ(m.dim(), hankel_rank(P("x^2")));
  EXPECT_EQ(als_solve(m), P("x^2"));
}

TEST(AlsMinimalMul, ThreeFactors) {
  const Als q = als_rows({{"1", "-y", "-1"}, {".", "1", "x"}, {".", ".", "1"}}, {".", ".", "1"});
  const Als r = als_rows({{"1", "-y", "-3"}, {".", "1", "x"}, {".", ".", "1"}}, {".", ".", "1"});
  const auto m = als_minimal_mul(als_minimal_mul(ps(als_x()), ps(q)), ps(r));
  const Als ex1 = als_rows({{"1", "-x", ".", ".", ".", "."},
                            {".", "1", "-y", "-1", ".", "."},
                            {".", ".", "1", "x", ".", "."},
                            {".", ".", ".", "1", "-y", "-3"},
                            {".", ".", ".", ".", "1", "x"},
                            {".", ".", ".", ".", ".", "1"}},
                           {".", ".", ".", ".", ".", "1"});
  EXPECT_EQ(m.als(), ex1);
  EXPECT_EQ(als_solve(m), P("x(1-y*x)(3-y*x)"));
}

TEST(AlsMinimalMul, RejectsSmallDimensions) {
  EXPECT_THROW(als_minimal_mul(ps(als_constant(xyz(), 2)), ps(als_x())), InvalidAls);
}

TEST(PreStandardize, Examples) {
  EXPECT_EQ(pre_standardize(minmul_result()).als(), minmul_result());
  const Als prod = als_mul(als_x(), als_one_minus_yx());
  EXPECT_EQ(pre_standardize(prod).als(), prod);
  // Dense general form: conjugate a pre-standard system by a full admissible transformation.
  AdmissibleTransformation t = AdmissibleTransformation::identity(4);
  t.p(1, 0) = 2;
  t.p(3, 2) = -1;
  t.p(0, 3) = Rational(1, 2);
  t.q(2, 1) = 3;
  t.q(1, 3) = -2;
  const Als dense = apply_transformation(minmul_result(), t);
  EXPECT_FALSE(dense.is_unit_upper_triangular());
  const auto back = pre_standardize(dense);
  EXPECT_EQ(als_solve(back), P("x - x*y*x"));
}

TEST(PreStandardize, RejectsSingularConstantPart) {
  Als a(xyz(), 2);
  a.set_entry(0, 1, P("x"));
  a.set_entry(1, 0, P("1"));
  a.v()[1] = 1;
  EXPECT_THROW(pre_standardize(a), InvalidAls);
}

TEST(ApplyTransformation, Examples) {
  const auto id = AdmissibleTransformation::identity(4);
  EXPECT_EQ(apply_transformation(minmul_result(), id), minmul_result());

  const auto eig = als_from_poly(P("x^3 - 10*x^2 + 31*x - 30"));
  const AdmissibleTransformation t{
      als_rows({{"1", "-5", "6", "."}, {".", "1", "-3", "."}, {".", ".", "1", "."}, {".", ".", ".", "1"}}, {})
          .coefficient(0),
      als_rows({{"1", ".", ".", "."}, {".", "1", "5", "9"}, {".", ".", "1", "3"}, {".", ".", ".", "1"}}, {})
          .coefficient(0)};
  const Als tri = apply_transformation(eig.als(), t);
  const Als expected = als_rows(
      {{"1", "5 - x", ".", "."}, {".", "1", "2 - x", "."}, {".", ".", "1", "3 - x"}, {".", ".", ".", "1"}},
      {".", ".", ".", "1"});
  EXPECT_EQ(tri, expected);

  AdmissibleTransformation bad = id;
  bad.q(0, 1) = 1;
  EXPECT_THROW(apply_transformation(minmul_result(), bad), InvalidAls);
  AdmissibleTransformation singular = id;
  singular.p(2, 2) = 0;
  EXPECT_THROW(apply_transformation(minmul_result(), singular), InvalidAls);
  EXPECT_THROW(apply_transformation(minmul_result(), AdmissibleTransformation::identity(3)), InvalidAls);
}

TEST(Companion, LeftSystems) {
  const auto eig = companion_left({P("x"), P("x"), P("x")}, {-30, 31, -10});
  EXPECT_EQ(eig.dim(), 4U);
  EXPECT_EQ(eig.als().entry_poly(0, 1), P("10 - x"));
  EXPECT_EQ(eig.als().entry_poly(0, 2), P("-31"));
  EXPECT_EQ(eig.als().entry_poly(0, 3), P("30"));

  const auto one = companion_left({P("x")}, {0});
  EXPECT_EQ(one.als(), als_x());

  const Rational a0(5), a1(-2), a2(7);
  const auto three = companion_left({P("x + 2*y"), P("x - z"), P("y")}, {a0, a1, a2});
  EXPECT_EQ(three.dim(), 4U);
  EXPECT_EQ(three.als().entry_poly(0, 1), P("-y - 7"));
  const NcPolynomial expected = P("5 - 2*(x + 2*y) + 7*(x - z)*(x + 2*y) + y*(x - z)*(x + 2*y)");
  EXPECT_EQ(als_solve(three), expected);
  EXPECT_TRUE(is_minimal(three.als()));

  EXPECT_THROW(companion_left({P("x*y")}, {0}), InvalidAls);
  EXPECT_THROW(companion_left({P("x"), P("y")}, {0}), InvalidAls);
}

TEST(Companion, RightSystems) {
  const NcPolynomial p = P("x*y*x*y*x - 4*x*y*x + 3*x");
  const auto r = companion_right({P("x"), P("y"), P("x"), P("y"), P("x")}, {0, 3, 0, -4, 0});
  EXPECT_EQ(r.dim(), 6U);
  EXPECT_EQ(als_solve(r), p);
  EXPECT_TRUE(is_minimal(r.als()));
  EXPECT_EQ(companion_right({P("x")}, {0}).als(), als_x());

  const auto l = companion_left({P("x"), P("x"), P("x")}, {-30, 31, -10});
  const auto rr = companion_right({P("x"), P("x"), P("x")}, {-30, 31, -10});
  EXPECT_EQ(als_solve(l), als_solve(rr));
}

TEST(AlsFromPoly, Examples) {
  EXPECT_EQ(als_from_poly(P("x - x*y*x")).dim(), 4U);
  EXPECT_EQ(als_from_poly(P("-3/2")).dim(), 1U);
  EXPECT_EQ(als_solve(als_from_poly(P("-3/2"))), P("-3/2"));
  EXPECT_EQ(als_from_poly(P("x*y*x*y*x - 4*x*y*x + 3*x")).dim(), 6U);
  EXPECT_EQ(als_from_poly(P("0")).dim(), 0U);
  const Als irred = als_rows({{"1", "-x", "2"}, {".", "1", "-x"}, {".", ".", "1"}}, {".", ".", "1"});
  EXPECT_EQ(als_from_poly(P("x^2 - 2")).als(), irred);
}

TEST(AlsInverse, BlockShape) {
  const Als inv1 = als_inverse_constructor(als_constant(xyz(), 4));
  EXPECT_EQ(inv1.dim(), 2U);
  EXPECT_EQ(inv1.entry_poly(0, 0), P("-4"));
  EXPECT_EQ(inv1.entry_poly(0, 1), P("1"));
  EXPECT_EQ(inv1.entry_poly(1, 1), P("1"));
  EXPECT_EQ(inv1.v()[1], Rational(1));

  EXPECT_EQ(als_inverse_constructor(als_inverse_constructor(als_x())).dim(), als_x().dim() + 2);

  const Als inv = als_inverse_constructor(als_x());
  // [[-v, A], [0, u]] with v = e2.
  const Als expected = als_rows({{".", "1", "-x"}, {"-1", ".", "1"}, {".", "1", "."}}, {".", ".", "1"});
  EXPECT_EQ(inv, expected);
  EXPECT_THROW(als_inverse_constructor(Als(xyz(), 0)), InvalidAls);
}

TEST(AlsFamilies, MinimalityCriterion) {
  const auto t = right_family(minmul_result());
  ASSERT_EQ(t.size(), 4U);
  EXPECT_EQ(t[0], P("1"));
  EXPECT_EQ(t[1], P("x"));
  EXPECT_EQ(t[2], P("-x*y"));
  EXPECT_EQ(t[3], P("x(1 - y*x)"));
  const auto r = family_ranks(minmul_result());
  EXPECT_EQ(r.left, 4U);
  EXPECT_EQ(r.right, 4U);
  EXPECT_FALSE(is_minimal(als_mul(als_x(), als_one_minus_yx())));
}

TEST(AlsIo, JsonRoundTrip) {
  const Als a = als_from_poly(P("x*y*x*y*x - 4*x*y*x + 3*x")).als();
  const auto j = als_to_json(a);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["coefficients"][1]["component"], "x");
  EXPECT_EQ(als_from_json(nlohmann::json::parse(j.dump())), a);
  auto bad = nlohmann::json::parse(j.dump());
  bad["u"][1] = "1";
  EXPECT_THROW(als_from_json(bad), InvalidAls);
  bad = nlohmann::json::parse(j.dump());
  bad["v"][0] = "1/0";
  EXPECT_THROW(als_from_json(bad), std::invalid_argument);
}

TEST(AlsIo, BracketLayout) {
  const std::string text = format_als(minmul_result());
  EXPECT_NE(text.find("u = [1 . . .]"), std::string::npos);
  EXPECT_NE(text.find("[.   1  y  -1]"), std::string::npos) << text;
  EXPECT_NE(text.find("v = [. . . 1]^T"), std::string::npos);
}

TEST(AlsProperty, SemanticInvarianceUnderTransformations) {
  PolyGen gen(31);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int i = 0; i < 40; ++i) {
    const NcPolynomial p = gen.nonconstant(3, 4);
    const PreStandardAls s = als_from_poly(p);
    const std::size_t n = s.dim();
    AdmissibleTransformation t = AdmissibleTransformation::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) {
          t.p(r, c) = (r > c) ? 0 : val(gen.rng());
          if (r > 0) t.q(r, c) = (r > c) ? 0 : val(gen.rng());
        }
    // Unit triangular P, Q are invertible; a lower entry in P keeps it invertible as well.
    if (n > 1) t.p(n - 1, 0) = 0;
    const Als moved = apply_transformation(s.als(), t);
    EXPECT_EQ(als_evaluate(moved), p);
    EXPECT_EQ(als_solve(pre_standardize(moved)), p);
  }
}

TEST(AlsProperty, PreStandardizeDenseConjugates) {
  // Lower times upper unitriangular factors give dense invertible P, Q; Q keeps its
  // first row e_1 so u is preserved. Forces the general flag construction.
  PolyGen gen(53);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int i = 0; i < 40; ++i) {
    const NcPolynomial p = gen.nonconstant(3, 4);
    const PreStandardAls s = als_from_poly(p);
    const std::size_t n = s.dim();
    RationalMatrix lp = RationalMatrix::identity(n), up = lp, lq = lp, uq = lp;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r > c) lp(r, c) = val(gen.rng()), lq(r, c) = val(gen.rng());
        if (r < c) up(r, c) = val(gen.rng());
        if (r < c && r > 0) uq(r, c) = val(gen.rng());
      }
    const AdmissibleTransformation t{lp * up, lq * uq};
    const Als moved = apply_transformation(s.als(), t);
    ASSERT_EQ(als_evaluate(moved), p);
    const PreStandardAls back = pre_standardize(moved);
    EXPECT_TRUE(back.als().is_pre_standard());
    EXPECT_LE(back.dim(), n + 1);
    EXPECT_EQ(als_solve(back), p) << format_als(moved);
  }
}

TEST(AlsProperty, Homomorphisms) {
  PolyGen gen(77);
  for (int i = 0; i < 40; ++i) {
    const NcPolynomial p = gen.nonconstant(3, 3), q = gen.nonconstant(3, 3);
    const auto sp = als_from_poly(p), sq = als_from_poly(q);
    const auto m = als_minimal_mul(sp, sq);
    EXPECT_EQ(als_solve(m), p * q);
    EXPECT_EQ(m.dim(), sp.dim() + sq.dim() - 1);
    EXPECT_EQ(m.dim(), hankel_rank(p * q));
    EXPECT_EQ(als_solve(pre_standardize(als_add(sp.als(), sq.als()))), p + q);
    EXPECT_EQ(als_evaluate(als_mul(sp.als(), sq.als())), p * q);
  }
}

TEST(AlsProperty, FromPolyIsMinimal) {
  PolyGen gen(123);
  for (int i = 0; i < 60; ++i) {
    const NcPolynomial p = gen.nonzero(4, 5);
    const auto s = als_from_poly(p);
    EXPECT_EQ(als_solve(s), p);
    EXPECT_EQ(s.dim(), hankel_rank(p)) << print_poly(p);
    EXPECT_TRUE(is_minimal(s.als()));
  }
}
