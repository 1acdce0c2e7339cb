#include <dunkl/special.hpp>
#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>

using namespace dunkl;

TEST(Special, GammaMatchesStandardLibrary) {
  for (double x : {0.3, 1.0, 2.5, 7.25, 20.0, -0.5, -2.75}) EXPECT_NEAR(gamma_r(x) / std::tgamma(x), 1.0, 1e-13);
  EXPECT_THROW(gamma_c(cplx(-2, 0)), PoleError);
}

TEST(Special, GammaComplexAgainstRecurrence) {
  cplx z(1.3, 0.7);
  EXPECT_NEAR(std::abs(gamma_c(z + 1.0) / (z * gamma_c(z)) - 1.0), 0, 1e-13);
  EXPECT_NEAR(std::abs(gamma_c(std::conj(z)) - std::conj(gamma_c(z))), 0, 1e-14);
}

TEST(Special, RankOneGammaIsClassical) {
  for (double a : {0.5, 1.0, 3.2}) EXPECT_NEAR(gamma_n(a, 1, 0.7).real(), std::tgamma(a), 1e-12 * std::tgamma(a));
}

TEST(Special, MultivariateGammaFactorization) {
  // Gamma_n(alpha + lambda) = [alpha]_lambda Gamma_n(alpha)
  const double k = 0.6;
  const cplx alpha(2.3, 0.4);
  for (Partition lam : {Partition{2, 1, 0}, Partition{3, 3, 1}}) {
    CVec shifted(3);
    for (int j = 0; j < 3; ++j) shifted[j] = alpha + double(lam[j]);
    cplx lhs = gamma_n(shifted, k);
    cplx rhs = pochhammer_gen(alpha, lam, k) * gamma_n(alpha, 3, k);
    EXPECT_NEAR(std::abs(lhs / rhs - 1.0), 0, 1e-12);
  }
}

TEST(Special, PochhammerExactRankOne) {
  EXPECT_EQ(pochhammer_gen(Q(1, 2), Partition{3}, Q(0)), Q(1, 2) * Q(3, 2) * Q(5, 2));
}

TEST(Special, MehtaConstantTwoVariables) {
  // c_A for n = 2: 2 pi Gamma(1 + 2k) / Gamma(1 + k)
  const double k = 0.75;
  EXPECT_NEAR(mehta_cA(2, k), 2 * M_PI * std::tgamma(1 + 2 * k) / std::tgamma(1 + k), 1e-12);
}

TEST(Special, BernsteinPolynomialFactorizations) {
  const Q k(2, 7), nu(19, 5);
  Params prm{3, k, nu};
  for (int m = -2; m <= 4; ++m) {
    Q mu(m, 3);
    EXPECT_EQ((bernstein_B<Q, Q>(mu, 3, k, prm.kprime())), (bernstein_B_via_b<Q, Q>(mu, 3, k, nu)));
  }
  EXPECT_EQ((bernstein_b<Q, Q>(Q(-1), 2, Q(1))), Q(0));
}

TEST(Special, TypeBConstant) {
  EXPECT_NEAR(c_B(1.5, 1, 0).real(), std::pow(2.0, 1.5) * std::tgamma(1.5), 1e-13);
}
