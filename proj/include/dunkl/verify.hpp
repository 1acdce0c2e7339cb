#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "transforms.hpp"

namespace dunkl {

struct CheckResult {
  std::string check_id;
  std::string paper_anchor;
  std::string status;  // pass, fail, error
  double residual = 0;
  double tolerance = 0;
  std::string note;
};

struct SuiteOptions {
  std::string suite = "all";  // symbolic, quadrature, zeta, all
  std::uint64_t seed = 1;
  int n = 0;  // 0: every rank the suite covers
  std::optional<Q> k;
};

struct Check {
  std::string id;
  std::string anchor;
  std::string suite;
  int n;
  double tolerance;
  std::function<double()> residual;
};

namespace detail {

inline double max_abs_coeff(const MPoly& p) {
  double m = 0;
  for (auto& [a, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

inline double exact_residual(const MPoly& a, const MPoly& b) {
  MPoly d = a;
  d -= b;
  return max_abs_coeff(d);
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

inline std::string comp_tag(const Composition& a) {
  std::string s;
  for (int v : a) s += std::to_string(v);
  return s;
}

// Small positive rationals from a seeded stream; the mapping avoids library distributions so draws are
// reproducible across standard libraries.
struct RationalDraw {
  std::mt19937_64 rng;
  explicit RationalDraw(std::uint64_t seed) : rng(seed) {}
  Q next(int max_num, int max_den) {
    long a = 1 + static_cast<long>(rng() % max_num);
    long b = 1 + static_cast<long>(rng() % max_den);
    Q q(a, b);
    q.canonicalize();
    return q;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * double(rng() >> 11) * 0x1.0p-53; }
};

// (k, nu) with k' = nu - mu0 - 1/2 > 0; a fixed k replaces the drawn one.
inline Params draw_params(int n, RationalDraw& d, const std::optional<Q>& k) {
  Q kk = d.next(5, 4);
  Q kp = d.next(7, 5);
  if (k) kk = *k;
  return Params::from_kprime(n, kk, kp);
}

// Default numeric parameters, moved with an overriding k so that nu - mu0 is preserved.
inline Params shifted(int n, const Q& k_default, const Q& nu_default, const std::optional<Q>& k) {
  if (!k || n == 1) return Params{n, n == 1 ? Q(0) : k_default, nu_default};
  return Params{n, *k, nu_default - k_default * (n - 1) + *k * (n - 1)};
}

}  // namespace detail

inline void add_symbolic_checks(std::vector<Check>& out, const SuiteOptions& opt) {
  detail::RationalDraw draw(opt.seed);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 3; ++t) {
      Params prm = detail::draw_params(n, draw, opt.k);
      for (int mu = 1; mu <= 3; ++mu) {
        out.push_back({"bernstein.n" + std::to_string(n) + ".draw" + std::to_string(t) + ".mu" + std::to_string(mu),
                       "Bernstein identity Delta(T^B)^2 Delta(x^2)^mu = B(mu) Delta(x^2)^(mu-1)", "symbolic", n, 0,
                       [=] {
                         MPoly P = MPoly::monomial(Composition(n, 2 * mu));
                         MPoly lhs = apply_delta_dunkl(apply_delta_dunkl(P, Root::B, prm), Root::B, prm);
                         Q B = bernstein_B<Q, Q>(Q(mu), n, prm.k, prm.kprime());
                         MPoly rhs = MPoly::monomial(Composition(n, 2 * mu - 2)) * B;
                         Q viab = bernstein_B_via_b<Q, Q>(Q(mu), n, prm.k, prm.nu);
                         return detail::exact_residual(lhs, rhs) + std::abs(Q(B - viab).get_d());
                       }});
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    Params prm = detail::draw_params(n, draw, opt.k);
    for (int p = 0; p <= 6; ++p) {
      MPoly target = power_sum_linear(n).pow(p);
      out.push_back({"jack_normalization.C.n" + std::to_string(n) + ".p" + std::to_string(p),
                     "symmetric Jack normalization sum C_lambda = (x_1 + ... + x_n)^p", "symbolic", n, 0, [=] {
                       MPoly s(n);
                       for (auto& lam : partitions(n, p)) s += jack_C(lam, prm);
                       return detail::exact_residual(s, target);
                     }});
      out.push_back({"jack_normalization.L.n" + std::to_string(n) + ".p" + std::to_string(p),
                     "non-symmetric Jack normalization sum L_eta = (x_1 + ... + x_n)^p", "symbolic", n, 0, [=] {
                       MPoly s(n);
                       for (auto& eta : compositions(n, p)) s += jack_L(eta, prm);
                       return detail::exact_residual(s, target);
                     }});
    }
  }
  for (int n = 1; n <= 2; ++n) {
    Params prm = detail::draw_params(n, draw, opt.k);
    out.push_back({"b_pairing.n" + std::to_string(n),
                   "type B pairing of L_eta(x^2): orthogonal with norm 4^|eta| |eta|! [nu]_eta+ L_eta(1)", "symbolic", n,
                   0, [=] {
                     double worst = 0;
                     for (int d1 = 0; d1 <= 3; ++d1)
                       for (auto& e1 : compositions(n, d1)) {
                         MPoly a = jack_L(e1, prm).square_vars();
                         for (int d2 = 0; d2 <= 3; ++d2)
                           for (auto& e2 : compositions(n, d2)) {
                             Q v = dunkl_pairing(a, jack_L(e2, prm).square_vars(), Root::B, prm);
                             Q expect = 0;
                             if (e1 == e2) {
                               expect = pochhammer_gen(prm.nu, to_partition(e1), prm.k) *
                                        jack_layer(n, prm.k, d1).L1.at(e1);
                               for (int j = 1; j <= d1; ++j) expect *= 4 * j;
                             }
                             worst = std::max(worst, std::abs(Q(v - expect).get_d()));
                           }
                       }
                     return worst;
                   }});
  }
  for (int n = 1; n <= 2; ++n) {
    for (int t = 0; t < 3; ++t) {
      Params prm = detail::draw_params(n, draw, opt.k);
      out.push_back({"l_nu_conjugation.n" + std::to_string(n) + ".draw" + std::to_string(t),
                     "Delta(T^B)^2 on f0(x^2) equals (L_nu f0)(x^2)", "symbolic", n, 0, [=] {
                       double worst = 0;
                       for (int d = 0; d <= 3; ++d)
                         for (auto& a : compositions(n, d)) {
                           MPoly f0 = MPoly::monomial(a);
                           MPoly lhs = apply_delta_dunkl(apply_delta_dunkl(f0.square_vars(), Root::B, prm), Root::B, prm);
                           worst = std::max(worst, detail::exact_residual(lhs, apply_L_nu(f0, prm).square_vars()));
                         }
                       return worst;
                     }});
    }
  }
  for (int n = 1; n <= 2; ++n) {
    Params prm = detail::draw_params(n, draw, opt.k);
    out.push_back({"type_b_kernel_layers.n" + std::to_string(n),
                   "0K1(nu; w^2/2, z^2/2) degree layers: (T^B_z,i)^2 h_D = w_i^2 h_(D-1)", "symbolic", n, 0, [=] {
                     double worst = 0;
                     MPoly prev(2 * n, Q(1));
                     for (int D = 1; D <= 6; ++D) {
                       MPoly h = bessel_layer_squared(D, prm);
                       for (int i = 0; i < n; ++i) {
                         MPoly lhs = apply_dunkl(apply_dunkl(h, i, Root::B, prm, n), i, Root::B, prm, n);
                         Composition e(2 * n, 0);
                         e[i] = 2;
                         worst = std::max(worst, detail::exact_residual(lhs, MPoly::monomial(e) * prev));
                       }
                       prev = h;
                     }
                     return worst;
                   }});
  }
}

inline void add_quadrature_checks(std::vector<Check>& out, const SuiteOptions& opt) {
  detail::RationalDraw draw(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const Params p1{1, 0, Q(2)};
  const Params p2 = detail::shifted(2, Q(1, 2), Q(3), opt.k);
  const QuadratureSpec def{};

  for (int n = 1; n <= 3; ++n) {
    Params prm = detail::shifted(n, Q(1, 2), Q(3), opt.k);
    out.push_back({"gamma_n_normalization.n" + std::to_string(n),
                   "orthant integral of exp(-sum x) Delta^(mu-mu0-1) omega^A equals Gamma_n(mu)", "quadrature", n, 1e-9,
                   [=] {
                     const double mu = prm.mu0d() + 1.5;
                     PointFn f = [](const std::vector<double>& x) {
                       double s = 0;
                       for (double v : x) s += v;
                       return cplx(std::exp(-s));
                     };
                     QuadratureSpec s{n == 3 ? 60 : 80, Scheme::Auto, 1.0};
                     return detail::rel(integrate_orthant(f, mu, s, prm).value, gamma_n(mu, n, prm.kd()));
                   }});
  }
  out.push_back({"measure_invariance.n2", "omega^A Delta^(-mu0-1) dx invariant under inversion and dilation", "quadrature",
                 2, 1e-10, [=] {
                   PointFn h = [](const std::vector<double>& x) {
                     double s = 0, r = 0;
                     for (double v : x) {
                       s += v;
                       r += 1 / v;
                     }
                     return cplx(std::exp(-s - r));
                   };
                   auto rep = invariance_check_measure(h, 1.7, QuadratureSpec{80, Scheme::TanhSinh, 1.0}, p2);
                   return std::max(rep.inversion, rep.scaling) / std::abs(rep.reference);
                 }});

  // Laplace transforms of Jack polynomials.
  const CVec zs[2] = {{1.0, 2.0}, {0.7, 1.6}};
  const Params pl = detail::shifted(2, Q(1, 2), Q(3), opt.k);
  const double mu_l = 2.5 + (pl.mu0d() - 0.5);
  for (int zi = 0; zi < 2; ++zi)
    for (int d = 0; d <= 2; ++d) {
      for (auto& eta : compositions(2, d))
        out.push_back({"laplace.n2.E" + detail::comp_tag(eta) + ".z" + std::to_string(zi),
                       "Laplace transform of E_eta: Gamma_n(mu + eta+) E_eta(1/z) Delta(z)^(-mu)", "quadrature", 2, 1e-6,
                       [=] { return laplace_jack_check(eta, false, mu_l, zs[zi], def, pl).rel_error(); }});
      for (auto& lam : partitions(2, d))
        out.push_back({"laplace.n2.P" + detail::comp_tag(lam) + ".z" + std::to_string(zi),
                       "Laplace transform of P_lambda: Gamma_n(mu + lambda) P_lambda(1/z) Delta(z)^(-mu)", "quadrature",
                       2, 1e-6, [=] { return laplace_jack_check(lam, true, mu_l, zs[zi], def, pl).rel_error(); }});
    }
  for (int d = 0; d <= 2; ++d)
    out.push_back({"laplace.n1.E" + std::to_string(d), "Laplace transform of x^d: Gamma(mu + d) z^(-mu - d)",
                   "quadrature", 1, 1e-6, [=] {
                     return laplace_jack_check(Composition{d}, false, 2.5, CVec{1.3}, def, Params{1, 0, Q(2)}).rel_error();
                   }});

  // Hankel transform of the kernel family e_z.
  auto law = [](const CVec& z, const CVec& w, const Params& prm) {
    const cplx nu = prm.nu.get_d();
    TruncationConfig tr{default_series_degree(prm.n), 1e-16};
    auto h = hankel(kernel_family(z, prm), nu, w, QuadratureSpec{}, tr, prm);
    std::vector<double> wr = real_parts(w);
    cplx expect = std::pow(delta_c(z), -nu) * kernel_A(wr, negate(reciprocal(z)), prm);
    return detail::rel(h.value, expect);
  };
  out.push_back({"hankel_kernel_law.n1.w0", "Hankel transform of e_z equals Delta(z)^(-nu) E^A(., -1/z)", "quadrature",
                 1, 1e-5, [=] { return law({1.5}, {0.7}, p1); }});
  out.push_back({"hankel_kernel_law.n1.w1", "Hankel transform of e_z equals Delta(z)^(-nu) E^A(., -1/z)", "quadrature",
                 1, 1e-5, [=] { return law({1.5}, {3.0}, p1); }});
  out.push_back({"hankel_kernel_law.n2.w0", "Hankel transform of e_z equals Delta(z)^(-nu) E^A(., -1/z)", "quadrature",
                 2, 1e-5, [=] { return law({1.2, 1.4}, {0.5, 0.6}, p2); }});
  out.push_back({"hankel_kernel_law.n2.w1", "Hankel transform of e_z equals Delta(z)^(-nu) E^A(., -1/z)", "quadrature",
                 2, 1e-5, [=] { return law({1.2, 1.4}, {2.0, 0.3}, p2); }});
  auto iso = [](const CVec& z, const CVec& w, const Params& prm) {
    // Few outer radial nodes keep the inner kernel series inside its well-conditioned range.
    QuadratureSpec outer{6, Scheme::GaussLaguerre, 0, 24}, inner{32, Scheme::GaussLaguerre, 0};
    auto rep = hankel_isometry_check(z, w, prm.nu.get_d(), outer, inner,
                                     TruncationConfig{default_series_degree(prm.n), 1e-16}, prm);
    return std::max(detail::rel(rep.lhs, rep.rhs_closed), detail::rel(rep.rhs_quadrature, rep.rhs_closed));
  };
  out.push_back({"hankel_isometry.n1", "Hankel transform is an isometry: <H e_z, H e_w> = <e_z, e_w>", "quadrature", 1,
                 1e-5, [=] { return iso({1.5}, {0.8}, p1); }});
  out.push_back({"hankel_isometry.n2", "Hankel transform is an isometry: <H e_z, H e_w> = <e_z, e_w>", "quadrature", 2,
                 1e-5, [=] { return iso({1.2, 1.4}, {0.5, 0.6}, p2); }});

  // K-Bessel function.
  for (double nu : {0.5, 1.3, -0.7})
    out.push_back({"kbessel_classical.n1.nu" + std::to_string(nu).substr(0, 4),
                   "rank one K-Bessel equals 2 (z/w)^(nu/2) K_nu(2 sqrt(wz))", "quadrature", 1, 1e-8, [=] {
                     const double w = 0.7, z = 1.9;
                     auto r = kbessel(nu, {w}, {z}, QuadratureSpec{}, p1);
                     double expect = 2 * std::pow(z / w, nu / 2) * boost::math::cyl_bessel_k(nu, 2 * std::sqrt(w * z));
                     return std::abs(r.value.real() - expect) / expect;
                   }});
  for (int t = 0; t < 3; ++t) {
    CVec w{draw.uniform(0.5, 2), draw.uniform(0.5, 2)}, z{draw.uniform(0.5, 2), draw.uniform(0.5, 2)};
    const double nu = draw.uniform(-2, 2);
    out.push_back({"kbessel_symmetry.n2.draw" + std::to_string(t), "K_nu(w, z) = K_(-nu)(z, w)", "quadrature", 2, 1e-6,
                   [=] {
                     auto a = kbessel(nu, w, z, QuadratureSpec{}, p2), b = kbessel(-nu, z, w, QuadratureSpec{}, p2);
                     return detail::rel(a.value, b.value);
                   }});
  }
  out.push_back({"kbessel_limit.n2", "eps^(n nu) K_nu(eps w, z) tends to Gamma_n(nu) Delta(w)^(-nu)", "quadrature", 2,
                 1e-3, [=] {
                   const double nu = 3;
                   const CVec z{0.6, 2.1};
                   std::vector<double> F;
                   for (double e : {1e-2, 1e-3}) {
                     auto r = kbessel(nu, {e * 0.8, e * 1.3}, z, QuadratureSpec{}, p2);
                     F.push_back(std::pow(e, 2 * nu) * r.value.real());
                   }
                   // Leading correction is linear in eps.
                   double extrapolated = (10 * F[1] - F[0]) / 9;
                   double limit = gamma_n(nu, 2, p2.kd()).real() * std::pow(0.8 * 1.3, -nu);
                   return std::abs(extrapolated / limit - 1);
                 }});
  out.push_back({"kbessel_eigen.n2", "(T_i^B)^2 K_(nu-mu0-1)(x^2, w) = 4 w_i K_(nu-mu0-1)(x^2, w)", "quadrature", 2,
                 5e-3, [=] {
                   auto r = kbessel_eigen_check({1.0, 1.0}, {0.7, 1.3}, 1e-3, QuadratureSpec{}, p2);
                   return *std::max_element(r.residual.begin(), r.residual.end());
                 }});
  out.push_back({"kbessel_eigen.n1", "(T^B)^2 K_(nu-1)(x^2, w) = 4 w K_(nu-1)(x^2, w)", "quadrature", 1, 5e-3, [=] {
                   auto r = kbessel_eigen_check({1.0}, {0.7}, 1e-3, QuadratureSpec{}, p1);
                   return r.residual[0];
                 }});
}

inline void add_zeta_checks(std::vector<Check>& out, const SuiteOptions& opt) {
  const QuadratureSpec def{};
  for (int n = 1; n <= 2; ++n) {
    // nu = 7/3 keeps every continuation path clear of the zeros of b.
    const Params prm = detail::shifted(n, Q(1, 2), Q(7, 3), opt.k);
    const double alphas[5] = {3, 1.2, 0.4, 0, -1};
    for (int i = 0; i < 5; ++i)
      out.push_back({"zeta_gaussian.n" + std::to_string(n) + ".a" + std::to_string(i),
                     "<zeta_alpha, exp(-|x|^2)> = 1 through analytic continuation", "zeta", n, 1e-6, [=] {
                       return std::abs(zeta_distribution(GaussPoly::gaussian(n), alphas[i], -1, def, prm).value - 1.0);
                     }});
  }
  const Params pz = detail::shifted(2, Q(1, 2), Q(7, 3), opt.k);
  const GaussPoly deltas[3] = {GaussPoly{MPoly::parse("1 + x1^2 + 3*x2^2", 2), Q(1)},
                               GaussPoly{MPoly::parse("2 - x1*x2 + x1^2*x2^2", 2), Q(1, 2)},
                               GaussPoly{MPoly::parse("x1^4 + 5", 2), Q(2)}};
  for (int i = 0; i < 3; ++i)
    out.push_back({"zeta_delta.n2.f" + std::to_string(i), "zeta_0 is the point evaluation at the origin", "zeta", 2, 1e-4,
                   [=] {
                     const GaussPoly& f = deltas[i];
                     return std::abs(zeta_distribution(f, 0.0, -1, def, pz).value - f({0.0, 0.0}));
                   }});

  auto fe = [](const GaussPoly& f, double alpha, const Params& prm) {
    auto r = functional_equation_check(f, alpha, FunctionalEquationConfig{}, prm);
    return std::abs(r.lhs / r.rhs - 1.0);
  };
  const Params f1{1, 0, Q(2)};
  const Params f2 = detail::shifted(2, Q(1, 2), Q(3), opt.k);
  out.push_back({"functional_equation.n1.gaussian", "zeta_alpha = 2^(n(2 alpha - nu)) F^B zeta_(nu - alpha)", "zeta", 1,
                 1e-8, [=] { return fe(GaussPoly::gaussian(1), 0.8, f1); }});
  out.push_back({"functional_equation.n1.delta_gaussian", "zeta_alpha = 2^(n(2 alpha - nu)) F^B zeta_(nu - alpha)",
                 "zeta", 1, 1e-3, [=] { return fe(GaussPoly{MPoly::parse("x1^2", 1), Q(1)}, 0.8, f1); }});
  out.push_back({"functional_equation.n2.gaussian", "zeta_alpha = 2^(n(2 alpha - nu)) F^B zeta_(nu - alpha)", "zeta", 2,
                 1e-3, [=] { return fe(GaussPoly::gaussian(2), 1.2 + (f2.mu0d() - 0.5), f2); }});

  const Params pw{2, opt.k ? *opt.k : Q(1, 2), Q(7, 3) + (opt.k ? *opt.k - Q(1, 2) : Q(0))};
  out.push_back({"wallach_tensor.n2.gaussian", "zeta_k on n = 2 is the symmetrized rank one zeta_(kn) tensor delta_0",
                 "zeta", 2, 1e-4, [=] {
                   auto r = wallach_discrete_check(1, GaussPoly::gaussian(2), def, pw);
                   return detail::rel(r.lhs, r.rhs);
                 }});
  out.push_back({"wallach_tensor.n2.quadratic", "zeta_k on n = 2 is the symmetrized rank one zeta_(kn) tensor delta_0",
                 "zeta", 2, 1e-4, [=] {
                   auto r = wallach_discrete_check(1, GaussPoly{MPoly::parse("1 + x1^2 + x2^2", 2), Q(1)}, def, pw);
                   return detail::rel(r.lhs, r.rhs);
                 }});
  out.push_back({"wallach_vanishing.n2", "zeta_k annihilates test functions vanishing on the coordinate axes", "zeta", 2,
                 1e-6, [=] {
                   GaussPoly f{MPoly::parse("x1^2*x2^2", 2), Q(1)};
                   auto r = wallach_discrete_check(1, f, def, pw);
                   // Scale: the same function against a zeta of the direct range.
                   double scale = std::abs(zeta_distribution(f, pw.mu0d() + 1, 0, def, pw).value);
                   return std::abs(r.lhs - r.rhs) / scale;
                 }});
}

inline std::vector<Check> build_checks(const SuiteOptions& opt) {
  std::vector<Check> all;
  const bool every = opt.suite == "all";
  if (!every && opt.suite != "symbolic" && opt.suite != "quadrature" && opt.suite != "zeta")
    throw std::invalid_argument("unknown suite: " + opt.suite);
  if (every || opt.suite == "symbolic") add_symbolic_checks(all, opt);
  if (every || opt.suite == "quadrature") add_quadrature_checks(all, opt);
  if (every || opt.suite == "zeta") add_zeta_checks(all, opt);
  std::vector<Check> kept;
  for (auto& c : all)
    if (opt.n == 0 || c.n == opt.n) kept.push_back(std::move(c));
  std::sort(kept.begin(), kept.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return kept;
}

inline CheckResult run_check(const Check& c) {
  CheckResult r{c.id, c.anchor, "error", std::numeric_limits<double>::quiet_NaN(), c.tolerance, ""};
  try {
    r.residual = c.residual();
    r.status = (std::isfinite(r.residual) && r.residual <= c.tolerance) ? "pass" : "fail";
  } catch (const std::exception& e) {
    r.note = e.what();
  }
  return r;
}

inline std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (auto& c : build_checks(opt)) out.push_back(run_check(c));
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.status == "pass"; });
}

}  // namespace dunkl
