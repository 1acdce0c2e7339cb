#include <dunkl/poly.hpp>
#include <gtest/gtest.h>

using namespace dunkl;

TEST(Poly, ParsePrintRoundTrip) {
  MPoly p = MPoly::parse("3*x1^2*x2 - 1/2*x2 + 7", 2);
  EXPECT_EQ(MPoly::parse(p.to_string(), 2), p);
  EXPECT_EQ(p.coeff({2, 1}), Q(3));
  EXPECT_EQ(p.coeff({0, 1}), Q(-1, 2));
  EXPECT_EQ(p.constant_term(), Q(7));
}

TEST(Poly, ParseRejectsGarbage) {
  EXPECT_THROW(MPoly::parse("x3", 2), std::invalid_argument);
  EXPECT_THROW(MPoly::parse("2*+", 2), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Poly, RingOperations) {
  MPoly x = MPoly::var(2, 0), y = MPoly::var(2, 1);
  MPoly s = x + y;
  EXPECT_EQ(s * s, x * x + x * y * Q(2) + y * y);
  EXPECT_EQ(s.pow(3).degree(), 3);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(power_sum_linear(2), s);
}

TEST(Poly, EvaluationExactAndNumeric) {
  MPoly p = MPoly::parse("x1^2 - 3*x1*x2 + 1/4", 2);
  EXPECT_EQ(p.eval_exact({Q(1, 2), Q(2)}), Q(1, 4) - Q(3) + Q(1, 4));
  EXPECT_DOUBLE_EQ(p.eval(std::vector<double>{0.5, 2.0}), -2.5);
  cplx v = p.eval(CVec{cplx(0, 1), cplx(1, 0)});
  EXPECT_NEAR(v.real(), -0.75, 1e-15);
  EXPECT_NEAR(v.imag(), -3, 1e-15);
}

TEST(Poly, SignedPermutationAction) {
  MPoly p = MPoly::parse("x1^2*x2 + x3", 3);
  EXPECT_EQ(p.swap_vars(0, 2), MPoly::parse("x3^2*x2 + x1", 3));
  EXPECT_EQ(p.act(SignedPerm::flip(3, 1)), MPoly::parse("-x1^2*x2 + x3", 3));
  auto g = SignedPerm::transposition(3, 0, 1).compose(SignedPerm::flip(3, 0));
  EXPECT_EQ(p.act(g), p.act(SignedPerm::flip(3, 0)).act(SignedPerm::transposition(3, 0, 1)));
}

TEST(Poly, SubstitutionsAndRestrictions) {
  MPoly p = MPoly::parse("x1*x2 + x1^3 + 2", 2);
  EXPECT_EQ(p.square_vars(), MPoly::parse("x1^2*x2^2 + x1^6 + 2", 2));
  EXPECT_EQ(p.restrict_zero(1), MPoly::parse("x1^3 + 2", 2));
  EXPECT_EQ(p.restrict_zero(1).truncate_vars(1), MPoly::parse("x1^3 + 2", 1));
  EXPECT_EQ(MPoly::parse("x1^2*x2 + x1*x2^3", 2).divide_monomial({1, 1}), MPoly::parse("x1 + x2^2", 2));
}

TEST(Poly, CompositionsAndPartitions) {
  EXPECT_EQ(compositions(3, 4).size(), 15u);  // C(6, 2)
  auto parts = partitions(2, 4);
  ASSERT_EQ(parts.size(), 3u);
  for (auto& p : parts) EXPECT_TRUE(is_partition(p));
  EXPECT_EQ(to_partition({0, 2, 1}), (Partition{2, 1, 0}));
  EXPECT_EQ(degree({0, 2, 1}), 3);
}
