#include <gtest/gtest.h>

#include "ncfactor/errors.hpp"
#include "ncfactor/hankel.hpp"
#include "ncfactor/minimizer.hpp"
#include "test_support.hpp"

using namespace ncfactor;
using ncfactor::testing::als_rows;
using ncfactor::testing::P;
using ncfactor::testing::PolyGen;
using ncfactor::testing::xyz;

namespace {

const Als& min0() {
  static const Als a = als_rows({{"1", "-x", ".", "-1", ".", "."},
                                 {".", "1", "-y", ".", ".", "."},
                                 {".", ".", "1", ".", ".", "."},
                                 {".", ".", ".", "1", "-x", "-z"},
                                 {".", ".", ".", ".", "1", "-y"},
                                 {".", ".", ".", ".", ".", "1"}},
                                {".", ".", "-1", ".", ".", "1"});
  return a;
}

const Als& after_left() {
  static const Als a = als_rows({{"1", "-x", "-1", ".", "."},
                                 {".", "1", ".", ".", "y"},
                                 {".", ".", "1", "-x", "-z"},
                                 {".", ".", ".", "1", "-y"},
                                 {".", ".", ".", ".", "1"}},
                                {".", ".", ".", ".", "1"});
  return a;
}

const Als& s51() {
  static const Als a = als_rows({{"1", "-x", ".", ".", "-1", "."},
                                 {".", "1", "-y", ".", ".", "."},
                                 {".", ".", "1", "-x", ".", "."},
                                 {".", ".", ".", "1", ".", "."},
                                 {".", ".", ".", ".", "1", "-x"},
                                 {".", ".", ".", ".", ".", "1"}},
                                {".", ".", ".", "-4", ".", "3"});
  return a;
}

RationalVector vec(std::initializer_list<int> v) {
  RationalVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

bool consistent(const LinearSystem& sys) { return solve_linear(sys.a, sys.b).has_value(); }

}  // namespace

TEST(BlockDecomposition, ReassemblesExactly) {
  for (std::size_t k = 1; k <= min0().dim(); ++k) {
    const auto b = decompose(min0(), k);
    EXPECT_EQ(reassemble(xyz(), b), min0()) << "k=" << k;
  }
}

TEST(LeftEquations, PrintedSolution) {
  const LinearSystem sys = left_min_equations(min0(), 3);
  // (d+1)(n-k) + 1 rows in 2(n-k) unknowns.
  EXPECT_EQ(sys.a.rows(), 4U * 3U + 1U);
  EXPECT_EQ(sys.a.cols(), 6U);
  const auto sol = solve_left(min0(), 3);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->t, vec({0, 0, 1}));
  EXPECT_EQ(sol->u, vec({0, 0, -1}));
}

TEST(LeftEquations, InconsistentOnMinimalSystems) {
  const Als m = als_from_poly(P("x - x*y*x")).als();
  EXPECT_FALSE(consistent(left_min_equations(m, m.dim() - 1)));
  EXPECT_FALSE(solve_left(m, m.dim() - 1));
  const Als mono = als_monomial(xyz(), Word{0}, 2);
  EXPECT_FALSE(solve_left(mono, 1));
}

TEST(RightEquations, PrintedSolution) {
  const LinearSystem sys = right_min_equations(after_left(), 3);
  EXPECT_EQ(sys.a.cols(), 4U);
  const auto sol = solve_right(after_left(), 3);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->t, vec({1, 0}));
  EXPECT_EQ(sol->u, vec({0, 0}));
}

TEST(RightEquations, InconsistentOnMinimalSystems) {
  const Als m = als_from_poly(P("x - x*y*x")).als();
  EXPECT_FALSE(consistent(right_min_equations(m, 2)));
}

TEST(RightEquations, FirstColumnNeverUsed) {
  // Every right solution keeps column 1 untouched, so the transformation stays admissible.
  PolyGen gen(8);
  for (int i = 0; i < 30; ++i) {
    const NcPolynomial p = gen.nonconstant(3, 3), q = gen.nonconstant(2, 2);
    const Als sum = als_add(als_from_poly(p).als(), als_from_poly(q).als());
    for (std::size_t k = 2; k <= sum.dim(); ++k)
      if (auto sol = solve_right(sum, k)) EXPECT_TRUE(sol->u.front().is_zero());
  }
}

TEST(MinimizationSteps, ReproducePrintedSystems) {
  const auto l = solve_left(min0(), 3);
  ASSERT_TRUE(l);
  const Als a1 = apply_left_step(min0(), *l);
  EXPECT_EQ(a1, after_left());
  const auto r = solve_right(a1, 3);
  ASSERT_TRUE(r);
  const Als a2 = apply_right_step(a1, *r);
  const Als expected = als_rows(
      {{"1", "-x", "-x", "-z"}, {".", "1", ".", "y"}, {".", ".", "1", "-y"}, {".", ".", ".", "1"}},
      {".", ".", ".", "1"});
  EXPECT_EQ(a2, expected);
  EXPECT_EQ(als_evaluate(a1), P("z"));
  EXPECT_EQ(als_evaluate(a2), P("z"));
}

TEST(MinimizationSteps, RejectWrongSolutions) {
  MinimizationSolution bogus{StepSide::Left, 3, vec({0, 0, 0}), vec({0, 0, 0})};
  EXPECT_THROW(apply_left_step(min0(), bogus), std::logic_error);
}

TEST(SpecialLeftCase, Examples) {
  // s_1 = alpha * s_2: entry (1,2) = -alpha, v = lambda e_2.
  const Als two = als_rows({{"1", "-2"}, {".", "1"}}, {".", "1"});
  ASSERT_TRUE(special_left_case_applies(two));
  const Als one = special_left_case(two);
  EXPECT_EQ(one, als_constant(xyz(), 2));

  const Als unit = als_rows({{"1", "-1"}, {".", "1"}}, {".", "5"});
  EXPECT_EQ(special_left_case(unit), als_constant(xyz(), 5));

  const Als lin = als_rows({{"1", "-x"}, {".", "1"}}, {".", "1"});
  EXPECT_FALSE(special_left_case_applies(lin));
  EXPECT_THROW(special_left_case(lin), InvalidAls);
}

TEST(Minimize, Examples) {
  const auto z = minimize(min0());
  EXPECT_EQ(z.dim(), 2U);
  EXPECT_EQ(z.dim(), hankel_rank(P("z")));
  EXPECT_EQ(als_solve(z), P("z"));

  const Als expected = als_rows(
      {{"1", "-x", "-1", "."}, {".", "1", "4/3 y", "."}, {".", ".", "1", "-x"}, {".", ".", ".", "1"}},
      {".", ".", ".", "3"});
  EXPECT_EQ(minimize(s51()).als(), expected);

  const auto p = als_from_poly(P("x - x*y*x"));
  const Als cancel = als_add(p.als(), als_scale(p.als(), -1));
  EXPECT_EQ(minimize(pre_standardize(cancel)).dim(), 0U);

  const Als minmul = als_rows(
      {{"1", "-x", ".", "."}, {".", "1", "y", "-1"}, {".", ".", "1", "-x"}, {".", ".", ".", "1"}}, {".", ".", ".", "1"});
  MinimizationTrace trace;
  EXPECT_EQ(minimize(minmul, &trace).als(), minmul);
  EXPECT_TRUE(trace.steps.empty());
}

TEST(Minimize, TraceRecordsSteps) {
  MinimizationTrace trace;
  minimize(min0(), &trace);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps.front().side, StepSide::Left);
  EXPECT_EQ(trace.steps.front().k, 3U);
  for (const auto& s : trace.steps) EXPECT_EQ(s.dim_after + 1, s.dim_before);
  EXPECT_LE(trace.steps.size(), 2 * (min0().dim() - 1));
}

TEST(Minimize, ReCheckAfterLeftStep) {
  // A left step can expose a right dependence at the same index.
  const Als s = als_rows({{"1", "-x", "-y", "x + y", "."},
                          {".", "1", ".", ".", "-z"},
                          {".", ".", "1", ".", "-z"},
                          {".", ".", ".", "1", "-y"},
                          {".", ".", ".", ".", "1"}},
                         {".", ".", ".", ".", "1"});
  const NcPolynomial p = als_evaluate(s);
  const auto m = minimize(s);
  EXPECT_EQ(als_solve(m), p);
  EXPECT_EQ(m.dim(), hankel_rank(p));
  EXPECT_TRUE(is_minimal(m.als()));
}

TEST(Minimize, DimensionOneUnchanged) {
  const Als c = als_constant(xyz(), 3);
  EXPECT_EQ(minimize(c).als(), c);
}

TEST(Minimize, RejectsNonTriangular) {
  Als a(xyz(), 2);
  a.set_entry(0, 0, P("1"));
  a.set_entry(1, 1, P("1"));
  a.set_entry(1, 0, P("x"));
  a.v()[1] = 1;
  EXPECT_THROW(minimize(a), InvalidAls);
}

TEST(MinimizeProperty, SumsOfMonomialsReachHankelRank) {
  PolyGen gen(4242);
  for (int i = 0; i < 80; ++i) {
    const NcPolynomial p = gen.poly(5, 5);
    Als acc(xyz(), 0);
    for (const auto& [w, c] : p.terms()) acc = als_add(acc, als_monomial(xyz(), w, c));
    const auto m = minimize(pre_standardize(acc));
    EXPECT_EQ(als_solve(m), p);
    EXPECT_EQ(m.dim(), hankel_rank(p)) << print_poly(p);
  }
}

TEST(MinimizeProperty, RationalOperationCompositions) {
  PolyGen gen(515);
  for (int i = 0; i < 40; ++i) {
    const NcPolynomial a = gen.nonzero(2, 3), b = gen.nonzero(2, 3), c = gen.nonzero(2, 2);
    const Als sa = als_from_poly(a).als(), sb = als_from_poly(b).als(), sc = als_from_poly(c).als();
    const Als composed = als_add(als_mul(sa, sb), als_scale(als_mul(sc, sa), -2));
    const NcPolynomial expected = a * b - poly_scale(2, c * a);
    const auto m = minimize(pre_standardize(composed));
    EXPECT_EQ(als_solve(m), expected);
    EXPECT_EQ(m.dim(), hankel_rank(expected));
  }
}
