#include <dunkl/hyp.hpp>
#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>

using namespace dunkl;

TEST(Hyp, RankOneKernelIsExponential) {
  Params prm{1, 0, Q(1, 2)};
  auto r = dunkl_kernel_A({0.8}, {-1.7}, TruncationConfig{60, 1e-16}, prm);
  EXPECT_NEAR(r.value.real(), std::exp(-0.8 * 1.7), 1e-14);
  EXPECT_TRUE(r.tail_reached);
}

TEST(Hyp, RankOneBesselAgainstModifiedBessel) {
  // 0F1(nu; t) = Gamma(nu) t^{(1-nu)/2} I_{nu-1}(2 sqrt t)
  Params prm{1, 0, Q(1, 2)};
  const double nu = 2.3, w = 0.9, z = 1.6, t = w * z;
  double expect = std::tgamma(nu) * std::pow(t, (1 - nu) / 2) * boost::math::cyl_bessel_i(nu - 1, 2 * std::sqrt(t));
  auto r = hyp_eval(HypSpec{{}, {nu}, SeriesKind::K}, {w}, {z}, TruncationConfig{60, 1e-16}, prm);
  EXPECT_NEAR(r.value.real() / expect, 1.0, 1e-13);
  auto j = bessel_kernel(BesselKind::J, nu, {w}, {z}, TruncationConfig{60, 1e-16}, prm);
  double jexp = std::tgamma(nu) * std::pow(t, (1 - nu) / 2) * boost::math::cyl_bessel_j(nu - 1, 2 * std::sqrt(t));
  EXPECT_NEAR(j.value.real() / jexp, 1.0, 1e-12);
}

TEST(Hyp, BinomialSeries) {
  // 1K0(a; w, z) = (1 - wz)^{-a} for n = 1
  Params prm{1, 0, Q(1, 2)};
  auto r = hyp_eval(HypSpec{{1.7}, {}, SeriesKind::K}, {0.5}, {0.6}, TruncationConfig{200, 1e-16}, prm);
  EXPECT_NEAR(r.value.real(), std::pow(0.7, -1.7), 1e-12);
  EXPECT_THROW(hyp_eval(HypSpec{{1.7}, {}, SeriesKind::K}, {1.5}, {0.9}, TruncationConfig{20, 1e-16}, prm),
               DomainError);
}

TEST(Hyp, KernelSeriesAgainstClosedForm) {
  Params prm{2, Q(1, 2), Q(1, 2)};
  std::vector<double> x{0.4, -0.9}, y{1.1, 0.3};
  double closed = dunkl_kernel_A_real(x, y, prm);
  auto s = dunkl_kernel_A(CVec(x.begin(), x.end()), CVec(y.begin(), y.end()), TruncationConfig{40, 1e-16}, prm);
  EXPECT_NEAR(s.value.real() / closed, 1.0, 1e-13);
}

TEST(Hyp, KernelSymmetricUnderDiagonalPermutation) {
  Params prm{3, Q(1, 3), Q(1, 2)};
  TruncationConfig tr{20, 1e-16};
  auto a = dunkl_kernel_A({0.3, -0.2, 0.5}, {0.1, 0.7, -0.4}, tr, prm);
  auto b = dunkl_kernel_A({-0.2, 0.3, 0.5}, {0.7, 0.1, -0.4}, tr, prm);
  EXPECT_NEAR(std::abs(a.value - b.value), 0, 1e-14);
}

TEST(Hyp, SymmetricSeriesOfKernelIsAveragedKernel) {
  // 0F0 is the S_n average of 0K0 over permutations of one argument.
  Params prm{2, Q(2, 3), Q(1, 2)};
  TruncationConfig tr{30, 1e-16};
  CVec w{0.6, -0.3}, z{0.4, 0.9};
  auto F = hyp_eval(HypSpec{{}, {}, SeriesKind::F}, w, z, tr, prm);
  auto K1 = hyp_eval(HypSpec{{}, {}, SeriesKind::K}, w, z, tr, prm);
  auto K2 = hyp_eval(HypSpec{{}, {}, SeriesKind::K}, CVec{w[1], w[0]}, z, tr, prm);
  EXPECT_NEAR(std::abs(F.value - (K1.value + K2.value) / 2.0), 0, 1e-14);
}

TEST(Hyp, InadmissibleDenominator) {
  Params prm{2, Q(1, 2), Q(1, 2)};
  EXPECT_THROW(hyp_eval(HypSpec{{}, {-1.0}, SeriesKind::K}, {0.1, 0.2}, {0.3, 0.4}, TruncationConfig{10, 1e-16}, prm),
               DomainError);
}

TEST(Hyp, PolynomialInFirstArgumentMatchesSeries) {
  Params prm{2, Q(1, 2), Q(1, 2)};
  HypSpec spec{{}, {2.5}, SeriesKind::K};
  CVec z{0.7, 0.2};
  NumPoly P = hyp_poly_in_first(spec, z, 25, prm);
  auto direct = hyp_eval(spec, {0.3, 0.9}, z, TruncationConfig{25, 0}, prm);
  EXPECT_NEAR(std::abs(P(std::vector<double>{0.3, 0.9}) - direct.value), 0, 1e-14);
}
