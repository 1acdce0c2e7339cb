#include <dunkl/transforms.hpp>
#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>

using namespace dunkl;

TEST(Transforms, GaussianDunklDerivative) {
  Params prm{2, Q(1, 2), Q(13, 5)};
  GaussPoly f{MPoly::parse("x1^2*x2 + 3*x2", 2), Q(3, 4)};
  GaussPoly g = apply_TB_gausspoly(f, 1, prm);
  RealFn fn = [&](const std::vector<double>& x) { return f(x); };
  std::vector<double> x{0.6, -1.1};
  EXPECT_NEAR(g(x), apply_dunkl_numeric(fn, x, 1, Root::B, to_num(prm), 1e-4, true), 1e-8);
}

TEST(Transforms, LaplaceOfJacks) {
  Params prm{2, Q(1, 2), Q(3)};
  for (auto& eta : compositions(2, 2))
    EXPECT_LT(laplace_jack_check(eta, false, 2.5, {1.1, 1.7}, QuadratureSpec{}, prm).rel_error(), 1e-10);
}

TEST(Transforms, RankOneKBessel) {
  Params prm{1, 0, Q(2)};
  auto r = kbessel(0.5, {1.0}, {1.0}, QuadratureSpec{}, prm);
  EXPECT_NEAR(r.value.real() / (2 * boost::math::cyl_bessel_k(0.5, 2.0)), 1.0, 1e-10);
}

TEST(Transforms, ShiftedKBesselAtZeroPartitionIsPlain) {
  Params prm{2, Q(1, 2), Q(3)};
  CVec w{0.9, 1.4}, z{1.2, 0.5};
  auto a = kbessel_shifted({0, 0}, 1.3, w, z, QuadratureSpec{}, prm);
  auto b = kbessel(1.3, w, z, QuadratureSpec{}, prm);
  EXPECT_NEAR(std::abs(a.value / b.value - 1.0), 0, 1e-12);
}

TEST(Transforms, ReversedNegatedIndex) {
  auto [part, s] = reversed_negated_index({3, 1, 0}, 0.5);
  EXPECT_EQ(part, (Partition{3, 2, 0}));
  EXPECT_NEAR(s.real(), -3.5, 0);
}

TEST(Transforms, HankelKernelLawRankOne) {
  Params prm{1, 0, Q(2)};
  auto h = hankel(kernel_family({1.5}, prm), 2.0, {0.7}, QuadratureSpec{}, TruncationConfig{100, 1e-16}, prm);
  EXPECT_NEAR(h.value.real(), std::pow(1.5, -2.0) * std::exp(-0.7 / 1.5), 1e-12);
}

TEST(Transforms, ZetaIntegralOfGaussianIsGamma) {
  Params prm{2, Q(1, 2), Q(7, 3)};
  auto r = zeta_integral(GaussPoly::gaussian(2), 2.0, QuadratureSpec{}, prm);
  EXPECT_NEAR(std::abs(r.value / gamma_n(2.0, 2, 0.5) - 1.0), 0, 1e-12);
}

TEST(Transforms, ZetaContinuationIndependentOfDepth) {
  Params prm{2, Q(1, 2), Q(7, 3)};
  GaussPoly f{MPoly::parse("1 + x1^2*x2^2 - x1^2", 2), Q(1)};
  auto a = zeta_distribution(f, 0.4, 2, QuadratureSpec{}, prm);
  auto b = zeta_distribution(f, 0.4, 3, QuadratureSpec{}, prm);
  EXPECT_NEAR(std::abs(a.value - b.value), 0, 1e-7 * std::abs(a.value));
}

TEST(Transforms, ZetaAtZeroIsPointEvaluation) {
  Params prm{1, 0, Q(7, 3)};
  GaussPoly f{MPoly::parse("4 + x1^2", 1), Q(1, 2)};
  EXPECT_NEAR(zeta_distribution(f, 0.0, -1, QuadratureSpec{}, prm).value.real(), 4.0, 1e-10);
}

TEST(Transforms, ZetaShiftThroughBernsteinOperator) {
  // <zeta_alpha, Delta(T^B)^2 f> = 4^n b(alpha - nu) <zeta_(alpha-1), f>
  Params prm{2, Q(1, 2), Q(7, 3)};
  GaussPoly f{MPoly::parse("2 + x1^2", 2), Q(1)};
  const double alpha = 3.1;
  auto lhs = zeta_distribution(apply_delta_TB2(f, prm), alpha, 0, QuadratureSpec{}, prm);
  auto rhs = zeta_distribution(f, alpha - 1, 0, QuadratureSpec{}, prm);
  cplx factor = 16.0 * bernstein_b(cplx(alpha) - prm.nu.get_d(), 2, 0.5);
  EXPECT_NEAR(std::abs(lhs.value / (factor * rhs.value) - 1.0), 0, 1e-10);
}

TEST(Transforms, FunctionalEquationRankOne) {
  Params prm{1, 0, Q(2)};
  auto r = functional_equation_check(GaussPoly::gaussian(1), 0.8, FunctionalEquationConfig{}, prm);
  EXPECT_NEAR(std::abs(r.lhs / r.rhs - 1.0), 0, 1e-8);
}

TEST(Transforms, WallachRequiresRankTwo) {
  Params prm{3, Q(1, 2), Q(3)};
  EXPECT_THROW(wallach_discrete_check(1, GaussPoly::gaussian(3), QuadratureSpec{}, prm), std::invalid_argument);
}

TEST(Transforms, LNuOnConstantsAndRankOne) {
  // n = 1: L_nu f0 = 4 (y f0'' + nu f0')
  Params prm{1, 0, Q(5, 2)};
  EXPECT_EQ(apply_L_nu(MPoly::parse("x1^3", 1), prm), MPoly::parse("x1^2", 1) * Q(54));
  EXPECT_TRUE(apply_L_nu(MPoly(2, Q(1)), Params{2, Q(1, 2), Q(3)}).is_zero());
}
