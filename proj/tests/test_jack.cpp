#include <dunkl/jack.hpp>
#include <gtest/gtest.h>

using namespace dunkl;

TEST(Jack, SmallClosedForms) {
  EXPECT_EQ(nonsymmetric_jack({3}, Params{1, 0, Q(1, 2)}), MPoly::parse("x1^3", 1));
  EXPECT_EQ(symmetric_jack({1, 1}, Params{2, Q(1, 2), Q(1, 2)}), MPoly::parse("x1*x2", 2));
  EXPECT_EQ(jack_C({1, 0}, Params{2, Q(1, 3), Q(1, 2)}), MPoly::parse("x1 + x2", 2));
}

TEST(Jack, SchurAtMultiplicityOne) {
  EXPECT_EQ(symmetric_jack({2, 0}, Params{2, 1, Q(1, 2)}), MPoly::parse("x1^2 + x1*x2 + x2^2", 2));
  EXPECT_EQ(symmetric_jack({2, 1, 0}, Params{3, 1, Q(1, 2)}),
            MPoly::parse("x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2", 3));
}

TEST(Jack, MonomialSymmetricAtMultiplicityZero) {
  EXPECT_EQ(symmetric_jack({2, 0}, Params{2, 0, Q(1, 2)}), MPoly::parse("x1^2 + x2^2", 2));
}

TEST(Jack, CherednikEigenfunctions) {
  Params prm{3, Q(2, 5), Q(1, 2)};
  const JackLayer& L = jack_layer(3, prm.k, 3);
  for (auto& eta : L.comps) {
    const MPoly& E = L.E.at(eta);
    EXPECT_EQ(E.coeff(eta), Q(1));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(apply_cherednik(E, j, prm), E * L.spectrum.at(eta)[j]);
  }
}

TEST(Jack, SymmetricJacksAreSymmetric) {
  Params prm{3, Q(3, 4), Q(1, 2)};
  for (auto& lam : partitions(3, 4)) {
    const MPoly& P = symmetric_jack(lam, prm);
    EXPECT_EQ(P.swap_vars(0, 1), P);
    EXPECT_EQ(P.swap_vars(1, 2), P);
  }
}

TEST(Jack, NormalizationsSumToPowerOfLinearForm) {
  Params prm{2, Q(5, 3), Q(1, 2)};
  for (int p = 0; p <= 5; ++p) {
    MPoly sc(2), sl(2);
    for (auto& lam : partitions(2, p)) sc += jack_C(lam, prm);
    for (auto& eta : compositions(2, p)) sl += jack_L(eta, prm);
    EXPECT_EQ(sc, power_sum_linear(2).pow(p));
    EXPECT_EQ(sl, power_sum_linear(2).pow(p));
  }
}

TEST(Jack, DegenerateMultiplicityIsReported) {
  EXPECT_THROW(jack_layer(2, Q(-1), 2), DegenerateMultiplicity);
  EXPECT_THROW(jack_layer(3, Q(-1, 2), 3), DegenerateMultiplicity);
}

TEST(Jack, IndexValidation) {
  EXPECT_THROW(symmetric_jack({0, 1}, Params{2, 1, Q(1, 2)}), std::invalid_argument);
  EXPECT_THROW(nonsymmetric_jack({1, 0, 0}, Params{2, 1, Q(1, 2)}), std::invalid_argument);
}

TEST(Jack, ExactSolver) {
  QMatrix A{{2, 1}, {1, 3}, {3, 4}};
  auto x = solve_exact(A, {3, 4, 7});
  EXPECT_EQ(x[0], Q(1));
  EXPECT_EQ(x[1], Q(1));
  EXPECT_THROW(solve_exact(A, {3, 4, 8}), std::domain_error);
}
