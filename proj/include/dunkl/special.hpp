#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dunkl_ops.hpp"

namespace dunkl {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Lanczos approximation (g = 7, 9 coefficients), reflection for Re z < 1/2.
inline cplx gamma_c(cplx z) {
  static const double g = 7;
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                 771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
    throw PoleError("gamma: pole at non-positive integer");
  if (z.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_c(1.0 - z));
  z -= 1;
  cplx x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + double(i));
  cplx t = z + g + 0.5;
  return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

inline double gamma_r(double x) { return gamma_c(cplx(x, 0)).real(); }

// Mehta constant c_A = (2 pi)^{n/2} prod_j Gamma(1 + jk)/Gamma(1 + k).
inline double mehta_cA(int n, double k) {
  double c = std::pow(2 * std::numbers::pi, n / 2.0);
  for (int j = 1; j <= n; ++j) c *= gamma_r(1 + j * k) / gamma_r(1 + k);
  return c;
}

// Gamma_n(z) = c_A (2 pi)^{-n/2} prod_j Gamma(z_j - k(j-1)).
inline cplx gamma_n(const CVec& z, double k) {
  const int n = static_cast<int>(z.size());
  cplx r = mehta_cA(n, k) * std::pow(2 * std::numbers::pi, -n / 2.0);
  for (int j = 0; j < n; ++j) r *= gamma_c(z[j] - k * j);
  return r;
}

inline cplx gamma_n(cplx alpha, int n, double k) { return gamma_n(CVec(n, alpha), k); }

// [alpha]_lambda = prod_j prod_{m < lambda_j} (alpha - k(j-1) + m), for exact or complex scalars.
template <class T, class K>
T pochhammer_gen(const T& alpha, const Partition& lam, const K& k) {
  T r = T(1);
  for (std::size_t j = 0; j < lam.size(); ++j)
    for (int m = 0; m < lam[j]; ++m) r *= alpha - T(k * K(int(j))) + T(m);
  return r;
}

// b(mu) = prod_j (mu + k(j-1)).
template <class T, class K>
T bernstein_b(const T& mu, int n, const K& k) {
  T r = T(1);
  for (int j = 0; j < n; ++j) r *= mu + T(k * K(j));
  return r;
}

// B(mu) = 4^n prod_j (mu + k(j-1)) (mu - 1/2 + k' + k(j-1)).
template <class T, class K>
T bernstein_B(const T& mu, int n, const K& k, const K& kprime) {
  T r = T(1);
  for (int j = 0; j < n; ++j) r *= T(4) * (mu + T(k * K(j))) * (mu - T(K(1) / K(2)) + T(kprime) + T(k * K(j)));
  return r;
}

// Same polynomial through 4^n b(mu) b(nu + mu - mu0 - 1).
template <class T, class K>
T bernstein_B_via_b(const T& mu, int n, const K& k, const T& nu) {
  T mu0 = T(k * K(n - 1));
  T four = T(1);
  for (int j = 0; j < n; ++j) four *= T(4);
  return four * bernstein_b<T, K>(mu, n, k) * bernstein_b<T, K>(nu + mu - mu0 - T(1), n, k);
}

// rho(k) = -(k/2)(n-1, n-3, ..., -n+1)
inline std::vector<Q> rho_vector(const Params& prm) {
  std::vector<Q> r(prm.n);
  for (int j = 0; j < prm.n; ++j) r[j] = -prm.k / 2 * (prm.n - 1 - 2 * j);
  return r;
}

// c_B = 2^{n nu} Gamma_n(nu)
inline cplx c_B(cplx nu, int n, double k) { return std::pow(2.0, double(n) * nu) * gamma_n(nu, n, k); }

}  // namespace dunkl
