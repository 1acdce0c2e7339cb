#include <dunkl/quad.hpp>
#include <gtest/gtest.h>

using namespace dunkl;

namespace {
PointFn decay(double c = 1) {
  return [c](const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v;
    return cplx(std::exp(-c * s));
  };
}
}  // namespace

TEST(Quad, LaguerreRuleExactOnPolynomials) {
  const double alpha = 1.7;
  const Rule& R = gauss_laguerre(12, alpha);
  for (int m = 0; m <= 20; ++m) {
    double s = 0;
    for (std::size_t i = 0; i < R.x.size(); ++i) s += R.w[i] * std::pow(R.x[i], m);
    double expect = std::tgamma(alpha + 1 + m);
    EXPECT_NEAR(s / expect, 1.0, 1e-12) << "m = " << m;
  }
}

TEST(Quad, JacobiRuleExactOnPolynomials) {
  const double a = 0.5, b = 1.25;
  const Rule& R = gauss_jacobi(10, a, b);
  // int (1-y)^a (1+y)^b dy = 2^{a+b+1} B(a+1, b+1)
  double total = 0;
  for (double w : R.w) total += w;
  double expect = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
  EXPECT_NEAR(total / expect, 1.0, 1e-13);
  double first = 0;
  for (std::size_t i = 0; i < R.x.size(); ++i) first += R.w[i] * R.x[i];
  EXPECT_NEAR(first / expect, (b - a) / (a + b + 2), 1e-13);
}

TEST(Quad, OrthantNormalizationAllRanks) {
  for (int n = 1; n <= 3; ++n)
    for (Scheme s : {Scheme::GaussLaguerre, Scheme::TanhSinh}) {
      if (n == 3 && s == Scheme::GaussLaguerre) continue;
      Params prm{n, Q(1, 2), Q(1, 2)};
      const double mu = prm.mu0d() + 1.25;
      auto r = integrate_orthant(decay(), mu, QuadratureSpec{n == 3 ? 50 : 80, s, 1.0}, prm);
      EXPECT_NEAR(std::abs(r.value / gamma_n(mu, n, prm.kd()) - 1.0), 0, 1e-9) << "n = " << n;
      EXPECT_LT(r.diagnostic, 1e-6 * std::abs(r.value));
    }
}

TEST(Quad, ScaledExponential) {
  // int e^{-c sum x} Delta^{mu-mu0-1} omega^A = Gamma_n(mu) c^{-n mu}
  Params prm{2, Q(1, 3), Q(1, 2)};
  const double c = 2.5, mu = 1.9;
  auto r = integrate_orthant(decay(c), mu, QuadratureSpec{}, prm);
  EXPECT_NEAR(std::abs(r.value / (gamma_n(mu, 2, prm.kd()) * std::pow(c, -2 * mu)) - 1.0), 0, 1e-11);
}

TEST(Quad, ComplexExponent) {
  Params prm{1, 0, Q(1, 2)};
  for (cplx mu : {cplx(2.0, 0.5), cplx(0.8, -1.0)}) {
    auto r = integrate_orthant(decay(), mu, QuadratureSpec{}, prm);
    EXPECT_NEAR(std::abs(r.value / gamma_c(mu) - 1.0), 0, 1e-11);
  }
}

TEST(Quad, GaussLaguerreNeedsConvergentExponent) {
  Params prm{2, Q(1, 2), Q(1, 2)};
  EXPECT_THROW(integrate_orthant(decay(), 0.2, QuadratureSpec{40, Scheme::GaussLaguerre, 1.0}, prm),
               QuadratureError);
}

TEST(Quad, WholeSpaceGaussian) {
  // int_{R^n} e^{-|x|^2} omega^B dx = Gamma_n(nu)
  for (int n = 1; n <= 2; ++n) {
    Params prm{n, Q(1, 2), Q(9, 4)};
    PointFn g = [](const std::vector<double>& x) {
      double r = 0;
      for (double v : x) r += v * v;
      return cplx(std::exp(-r));
    };
    auto r = integrate_rn_B(g, prm.nu.get_d(), QuadratureSpec{}, prm);
    EXPECT_NEAR(std::abs(r.value / gamma_n(prm.nu.get_d(), n, prm.kd()) - 1.0), 0, 1e-10);
  }
}

TEST(Quad, InvariantMeasure) {
  Params prm{2, Q(1, 2), Q(1, 2)};
  PointFn h = [](const std::vector<double>& x) { return cplx(std::exp(-x[0] - x[1] - 1 / x[0] - 1 / x[1])); };
  auto rep = invariance_check_measure(h, 2.2, QuadratureSpec{80, Scheme::TanhSinh, 1.0}, prm);
  EXPECT_LT(rep.inversion, 1e-10 * std::abs(rep.reference));
  EXPECT_LT(rep.scaling, 1e-10 * std::abs(rep.reference));
}
