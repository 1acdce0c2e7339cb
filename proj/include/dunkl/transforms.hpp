#pragma once

#include <cmath>
#include <stdexcept>

#include "hyp.hpp"
#include "jack.hpp"
#include "quad.hpp"
#include "special.hpp"

namespace dunkl {

// x -> p(x) exp(-c |x|^2)
struct GaussPoly {
  MPoly p;
  Q c = 1;

  static GaussPoly gaussian(int n, const Q& c = 1) { return GaussPoly{MPoly(n, Q(1)), c}; }
  int nvars() const { return p.nvars(); }

  double operator()(const std::vector<double>& x) const {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    return p.eval(x) * std::exp(-c.get_d() * r2);
  }
};

// T_i^B (p e^{-c|x|^2}) = (T_i^B p - 2c x_i p) e^{-c|x|^2}
inline GaussPoly apply_TB_gausspoly(const GaussPoly& f, int i, const Params& prm) {
  MPoly q = apply_dunkl(f.p, i, Root::B, prm);
  if (f.c != 0) q -= MPoly::var(f.p.nvars(), i) * f.p * Q(2 * f.c);
  return GaussPoly{q, f.c};
}

// Delta(T^B)^2 = (T_1 ... T_n)^2
inline GaussPoly apply_delta_TB2(GaussPoly f, const Params& prm) {
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 0; i < prm.n; ++i) f = apply_TB_gausspoly(f, i, prm);
  return f;
}

// Average over the hyperoctahedral group.
inline MPoly symmetrize_WB(const MPoly& p) {
  const int n = p.nvars();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly s(n);
  long count = 0;
  do {
    for (int m = 0; m < (1 << n); ++m) {
      SignedPerm g = SignedPerm::identity(n);
      g.perm = perm;
      for (int i = 0; i < n; ++i) g.sign[i] = (m >> i) & 1 ? -1 : 1;
      s += p.act(g);
      ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s * Q(1, count);
}

// q with q(x^2) = average of p over sign changes: keep all-even exponents, halve them.
inline MPoly even_part_in_squares(const MPoly& p) {
  MPoly q(p.nvars());
  for (auto& [a, c] : p.terms()) {
    bool even = true;
    for (int e : a) even = even && !(e & 1);
    if (!even) continue;
    Composition b(a);
    for (auto& e : b) e /= 2;
    q.add_term(b, c);
  }
  return q;
}

inline bool is_real(const CVec& v) {
  for (auto& x : v)
    if (x.imag() != 0) return false;
  return true;
}

inline std::vector<double> real_parts(const CVec& v) {
  std::vector<double> r;
  for (auto& x : v) r.push_back(x.real());
  return r;
}

// E^A(x, y); closed form for real data and n <= 2, the series otherwise.
inline cplx kernel_A(const std::vector<double>& x, const CVec& y, const Params& prm, int series_degree = 40) {
  if (is_real(y)) return dunkl_kernel_A_real(x, real_parts(y), prm, series_degree);
  CVec cx(x.begin(), x.end());
  return dunkl_kernel_A(cx, y, TruncationConfig{series_degree, 1e-16}, prm).value;
}

inline cplx delta_c(const CVec& z) {
  cplx d = 1;
  for (auto& v : z) d *= v;
  return d;
}

inline CVec reciprocal(const CVec& z) {
  CVec r(z);
  for (auto& v : r) v = 1.0 / v;
  return r;
}

inline CVec negate(const CVec& z) {
  CVec r(z);
  for (auto& v : r) v = -v;
  return r;
}

struct CheckPair {
  cplx quadrature;
  cplx closed_form;
  double diagnostic = 0;

  double rel_error() const { return std::abs(quadrature - closed_form) / std::abs(closed_form); }
};

// int E^A(-x, z) q(x) Delta^{mu-mu0-1} omega^A dx against Gamma_n(mu + plus) q(1/z) Delta(z)^{-mu},
// for q a (non-)symmetric Jack polynomial with eta_+ = plus.
inline CheckPair laplace_jack_check(const MPoly& q, const Partition& plus, cplx mu, const CVec& z,
                                    const QuadratureSpec& spec, const Params& prm) {
  if (mu.real() <= prm.mu0d()) throw DomainError("laplace_jack_check: Re mu must exceed mu0");
  for (auto& v : z)
    if (v.real() <= 0) throw DomainError("laplace_jack_check: Re z must be positive");
  CVec mz = negate(z);
  PointFn f = [&](const std::vector<double>& x) { return kernel_A(x, mz, prm) * q.eval(x); };
  QuadratureSpec s = spec;
  if (s.axis_scale <= 0) {
    double m = 1e300;
    for (auto& v : z) m = std::min(m, v.real());
    s.axis_scale = m;
  }
  auto r = integrate_orthant(f, mu, s, prm);
  CVec shifted(prm.n);
  for (int j = 0; j < prm.n; ++j) shifted[j] = mu + double(plus[j]);
  cplx rhs = gamma_n(shifted, prm.kd()) * q.eval(reciprocal(z)) * std::pow(delta_c(z), -mu);
  return CheckPair{r.value, rhs, r.diagnostic};
}

inline CheckPair laplace_jack_check(const Composition& eta, bool symmetric, cplx mu, const CVec& z,
                                    const QuadratureSpec& spec, const Params& prm) {
  const MPoly& q = symmetric ? symmetric_jack(eta, prm) : nonsymmetric_jack(eta, prm);
  return laplace_jack_check(q, to_partition(eta), mu, z, spec, prm);
}

inline int default_series_degree(int n) { return n == 1 ? 100 : n == 2 ? 70 : 16; }

// H_nu f0(w) = Gamma_n(nu)^{-1} int f0(x) E_nu(x, w) Delta^{nu-mu0-1} omega^A dx with the kernel truncated
// at degree D. The truncated kernel is a polynomial in x, so the quadrature reduces to monomial moments of
// f0, computed once; each w then costs one pass over the series table.
struct HankelPlan {
  const SeriesTable* table = nullptr;
  cplx nu;
  double k = 0;
  cplx gamma;
  std::vector<cplx> moments[2];  // fine and coarse rule

  QuadResult operator()(const CVec& w) const {
    const HypSpec spec{{}, {nu}, SeriesKind::K};
    auto vw = table->monomial_values(negate(w));
    cplx level[2] = {0, 0}, top = 0;
    double fact = 1;
    int cur = 0;
    for (auto& e : table->entries) {
      if (e.degree != cur) {
        cur = e.degree;
        fact *= cur;
      }
      cplx lw = 0, m0 = 0, m1 = 0;
      for (auto& [m, c] : e.terms) {
        lw += c * vw[m];
        m0 += c * moments[0][m];
        m1 += c * moments[1][m];
      }
      const cplx s = detail::coefficient(spec, e.plus, k) * lw / (fact * e.at_ones);
      level[0] += s * m0;
      level[1] += s * m1;
      if (e.degree == table->D) top += s * m0;
    }
    QuadResult r;
    r.value = level[0] / gamma;
    r.diagnostic = std::max(std::abs(level[0] - level[1]), std::abs(top)) / std::abs(gamma);
    return r;
  }
};

inline HankelPlan hankel_plan(const PointFn& f0, cplx nu, const QuadratureSpec& spec, const TruncationConfig& trunc,
                              const Params& prm) {
  if (nu.real() <= prm.mu0d()) throw DomainError("hankel: Re nu must exceed mu0");
  detail::check_denominators({nu}, prm.n, prm.kd(), trunc.max_degree);
  HankelPlan P;
  P.table = &series_table(prm.n, prm.k, trunc.max_degree, SeriesKind::K);
  P.nu = nu;
  P.k = prm.kd();
  P.gamma = gamma_n(nu, prm.n, prm.kd());
  QuadratureSpec s = spec;
  if (s.axis_scale <= 0) s.axis_scale = detail::probe_scale(f0, prm.n);
  for (int coarse = 0; coarse < 2; ++coarse) {
    auto& M = P.moments[coarse];
    M.assign(P.table->monos.size(), 0);
    orthant_nodes(nu, s, prm, coarse, [&](const std::vector<double>& x, cplx w) {
      cplx v = f0(x);
      if (v == cplx(0)) return;
      auto mv = P.table->monomial_values(x);
      for (std::size_t m = 0; m < M.size(); ++m) M[m] += w * v * mv[m];
    });
  }
  return P;
}

inline QuadResult hankel(const PointFn& f0, cplx nu, const CVec& w, const QuadratureSpec& spec,
                         const TruncationConfig& trunc, const Params& prm) {
  return hankel_plan(f0, nu, spec, trunc, prm)(w);
}

// F^B f(xi) = 2^{-n nu} H_nu f0(xi^2/4) for f(x) = f0(x^2).
inline QuadResult dunkl_transform_B_even(const HankelPlan& plan, const CVec& xi) {
  CVec w(xi);
  for (auto& v : w) v = v * v / 4.0;
  auto r = plan(w);
  cplx f = std::pow(2.0, -double(xi.size()) * plan.nu);
  r.value *= f;
  r.diagnostic *= std::abs(f);
  return r;
}

inline QuadResult dunkl_transform_B_even(const PointFn& f0, cplx nu, const CVec& xi, const QuadratureSpec& spec,
                                         const TruncationConfig& trunc, const Params& prm) {
  return dunkl_transform_B_even(hankel_plan(f0, nu, spec, trunc, prm), xi);
}

// e_z(x) = E^A(-x, z)
inline PointFn kernel_family(const CVec& z, const Params& prm) {
  CVec mz = negate(z);
  return [mz, prm](const std::vector<double>& x) { return kernel_A(x, mz, prm); };
}

struct IsometryReport {
  cplx lhs;             // <H e_z, H e_w> by double quadrature
  cplx rhs_quadrature;  // <e_z, e_w> by quadrature
  cplx rhs_closed;      // Gamma_n(nu) Delta(z)^{-nu} 1K0(nu; conj w, -1/z)
  double inner_diagnostic = 0;
};

// Inner product of L^2(R_+^n, Delta^{nu-mu0-1} omega^A) on the kernel family.
inline IsometryReport hankel_isometry_check(const CVec& z, const CVec& w, cplx nu, const QuadratureSpec& outer,
                                            const QuadratureSpec& inner, const TruncationConfig& trunc,
                                            const Params& prm) {
  PointFn ez = kernel_family(z, prm), ew = kernel_family(w, prm);
  IsometryReport rep;
  const HankelPlan Hz = hankel_plan(ez, nu, inner, trunc, prm), Hw = hankel_plan(ew, nu, inner, trunc, prm);
  PointFn outer_fn = [&](const std::vector<double>& y) {
    CVec cy(y.begin(), y.end());
    auto a = Hz(cy);
    auto b = Hw(cy);
    rep.inner_diagnostic = std::max(rep.inner_diagnostic, std::max(a.diagnostic, b.diagnostic));
    return a.value * std::conj(b.value);
  };
  QuadratureSpec os = outer;
  if (os.axis_scale <= 0) {
    double s = 0;
    for (int j = 0; j < prm.n; ++j) s += (1.0 / z[j]).real() + (1.0 / w[j]).real();
    os.axis_scale = s / prm.n;
  }
  rep.lhs = integrate_orthant(outer_fn, nu, os, prm).value;
  PointFn direct = [&](const std::vector<double>& x) { return ez(x) * std::conj(ew(x)); };
  QuadratureSpec ds = inner;
  ds.axis_scale = 0;
  rep.rhs_quadrature = integrate_orthant(direct, nu, ds, prm).value;
  CVec wbar(w);
  for (auto& v : wbar) v = std::conj(v);
  auto series = hyp_eval(HypSpec{{nu}, {}, SeriesKind::K}, wbar, negate(reciprocal(z)), trunc, prm);
  rep.rhs_closed = gamma_n(nu, prm.n, prm.kd()) * std::pow(delta_c(z), -nu) * series.value;
  return rep;
}

// K_nu(w, z) = int E^A(-x, w) E^A(-1/x, z) Delta^{nu-mu0-1} omega^A dx
inline QuadResult kbessel(cplx nu, const CVec& w, const CVec& z, const QuadratureSpec& spec, const Params& prm) {
  for (auto& v : w)
    if (v.real() <= 0) throw DomainError("kbessel: Re w must be positive");
  for (auto& v : z)
    if (v.real() <= 0) throw DomainError("kbessel: Re z must be positive");
  CVec mw = negate(w), mz = negate(z);
  PointFn f = [&](const std::vector<double>& x) {
    std::vector<double> inv(x);
    for (auto& v : inv) v = 1 / v;
    return kernel_A(x, mw, prm) * kernel_A(inv, mz, prm);
  };
  QuadratureSpec s = spec;
  s.scheme = Scheme::TanhSinh;
  if (s.axis_scale <= 0) {
    double m = 0;
    for (auto& v : w) m += v.real();
    s.axis_scale = m / prm.n;
  }
  return integrate_orthant(f, nu, s, prm);
}

// Shifted spectral index lambda = part + s 1: integrand carries Delta^s E_part(x)/E_part(1).
inline QuadResult kbessel_shifted(const Partition& part, cplx s, const CVec& w, const CVec& z,
                                  const QuadratureSpec& spec, const Params& prm) {
  const MPoly& E = nonsymmetric_jack(part, prm);
  const double e1 = eval_at_ones(E).get_d();
  CVec mw = negate(w), mz = negate(z);
  PointFn f = [&](const std::vector<double>& x) {
    std::vector<double> inv(x);
    for (auto& v : inv) v = 1 / v;
    return kernel_A(x, mw, prm) * kernel_A(inv, mz, prm) * E.eval(x) / e1;
  };
  QuadratureSpec q = spec;
  q.scheme = Scheme::TanhSinh;
  if (q.axis_scale <= 0) {
    double m = 0;
    for (auto& v : w) m += v.real();
    q.axis_scale = m / prm.n;
  }
  return integrate_orthant(f, s, q, prm);
}

// -lambda^R = part' + s' 1 for lambda = part + s 1.
inline std::pair<Partition, cplx> reversed_negated_index(const Partition& part, cplx s) {
  const int n = static_cast<int>(part.size());
  Partition out(n);
  for (int j = 0; j < n; ++j) out[j] = part[0] - part[n - 1 - j];
  return {out, -double(part[0]) - s};
}

inline CVec reversed(const CVec& v) { return CVec(v.rbegin(), v.rend()); }

struct EigenResidual {
  std::vector<double> residual;  // relative, per axis
  std::vector<double> value;     // f_w(x)
  double quad_diagnostic = 0;
};

// f_w(x) = K_{nu - mu0 - 1}(x^2, w) against (1/4)(T_i^B)^2 f_w = w_i f_w, with k' = nu - mu0 - 1/2.
inline EigenResidual kbessel_eigen_check(const std::vector<double>& w, const std::vector<double>& x, double h,
                                         const QuadratureSpec& spec, const Params& prm) {
  const int n = prm.n;
  const cplx index = Q(prm.nu - prm.mu0() - 1).get_d();
  CVec cw(w.begin(), w.end());
  EigenResidual out;
  RealFn f = [&](const std::vector<double>& y) {
    CVec y2(n);
    for (int i = 0; i < n; ++i) y2[i] = y[i] * y[i];
    auto r = kbessel(index, y2, cw, spec, prm);
    out.quad_diagnostic = std::max(out.quad_diagnostic, r.diagnostic / std::abs(r.value));
    return r.value.real();
  };
  NumParams np = to_num(prm);
  double fx = f(x);
  for (int i = 0; i < n; ++i) {
    RealFn g = [&](const std::vector<double>& y) { return apply_dunkl_numeric(f, y, i, Root::B, np, h); };
    double lhs = apply_dunkl_numeric(g, x, i, Root::B, np, h) / 4;
    out.residual.push_back(std::abs(lhs - w[i] * fx) / std::abs(w[i] * fx));
    out.value.push_back(fx);
  }
  return out;
}

struct PathThroughZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Z(f; alpha) = int f(x) Delta(x^2)^{alpha-nu} omega^B dx, through the orthant integral of the even part.
inline QuadResult zeta_integral(const GaussPoly& f, cplx alpha, const QuadratureSpec& spec, const Params& prm) {
  if (alpha.real() <= prm.mu0d()) throw DomainError("zeta_integral: Re alpha must exceed mu0; use zeta_distribution");
  MPoly q = even_part_in_squares(f.p);
  const double c = f.c.get_d();
  PointFn g = [&](const std::vector<double>& y) {
    double s = 0;
    for (double v : y) s += v;
    return cplx(q.eval(y) * std::exp(-c * s));
  };
  QuadratureSpec s = spec;
  if (s.axis_scale <= 0) s.axis_scale = c;
  return integrate_orthant(g, alpha, s, prm);
}

// Same for an even function given through f0 with f(x) = f0(x^2).
inline QuadResult zeta_integral_even(const PointFn& f0, cplx alpha, const QuadratureSpec& spec, const Params& prm) {
  if (alpha.real() <= prm.mu0d()) throw DomainError("zeta_integral_even: Re alpha must exceed mu0");
  return integrate_orthant(f0, alpha, spec, prm);
}

inline int auto_lift(cplx alpha, const Params& prm) {
  return std::max(0, static_cast<int>(std::ceil(prm.mu0d() + 1 - alpha.real())) + 1);
}

struct ZetaResult {
  cplx value;
  int m_used = 0;
  double diagnostic = 0;
};

// <zeta_alpha, f> = Z(Delta(T^B)^{2m} f; alpha + m) / Gamma_n(alpha + m) / (4^{nm} prod_j b(alpha + j - nu)).
// m_lift < 0 selects the depth automatically.
inline ZetaResult zeta_distribution(const GaussPoly& f, cplx alpha, int m_lift, const QuadratureSpec& spec,
                                    const Params& prm) {
  const int n = prm.n;
  const double k = prm.kd();
  const cplx nu = prm.nu.get_d();
  auto path_ok = [&](int m) {
    if (alpha.real() + m <= prm.mu0d()) return false;
    for (int j = 1; j <= m; ++j)
      if (std::abs(bernstein_b(alpha + double(j) - nu, n, k)) < 1e-8) return false;
    return true;
  };
  int m = m_lift;
  if (m < 0) {
    m = auto_lift(alpha, prm);
    if (!path_ok(m)) {
      if (path_ok(m + 1))
        m = m + 1;
      else if (m > 0 && path_ok(m - 1))
        m = m - 1;
      else
        throw PathThroughZero("zeta_distribution: continuation path meets a zero of b");
    }
  } else if (alpha.real() + m <= prm.mu0d()) {
    throw DomainError("zeta_distribution: m_lift too small for this alpha");
  } else if (!path_ok(m)) {
    throw PathThroughZero("zeta_distribution: continuation path meets a zero of b");
  }
  GaussPoly g = f;
  cplx denom = 1;
  for (int j = 1; j <= m; ++j) {
    g = apply_delta_TB2(g, prm);
    denom *= std::pow(4.0, n) * bernstein_b(alpha + double(j) - nu, n, k);
  }
  auto r = zeta_integral(g, alpha + double(m), spec, prm);
  cplx G = gamma_n(alpha + double(m), n, k);
  ZetaResult out;
  out.value = r.value / G / denom;
  out.m_used = m;
  out.diagnostic = r.diagnostic / std::abs(G * denom);
  return out;
}

struct FunctionalEquationConfig {
  QuadratureSpec outer{6, Scheme::GaussLaguerre, 0, 24};
  QuadratureSpec inner{48, Scheme::GaussLaguerre, 0};
  TruncationConfig trunc{0, 1e-16};  // max_degree 0 selects default_series_degree(n)
};

struct FunctionalEquationReport {
  cplx lhs, rhs;
  double inner_diagnostic = 0;
  double outer_diagnostic = 0;
  int m_used = 0;
};

// <zeta_alpha, f> against 2^{n(2 alpha - nu)} <zeta_{nu - alpha}, F^B f>, F^B f evaluated by an inner Hankel
// quadrature at each node of the outer zeta quadrature. f is symmetrized first.
inline FunctionalEquationReport functional_equation_check(const GaussPoly& f_in, cplx alpha,
                                                          const FunctionalEquationConfig& cfg, const Params& prm) {
  const int n = prm.n;
  const cplx nu = prm.nu.get_d();
  const cplx beta = nu - alpha;
  if (beta.real() <= prm.mu0d()) throw DomainError("functional_equation_check: nu - alpha outside the direct range");
  GaussPoly f{symmetrize_WB(f_in.p), f_in.c};
  FunctionalEquationReport rep;
  auto lhs = zeta_distribution(f, alpha, -1, cfg.inner, prm);
  rep.lhs = lhs.value;
  rep.m_used = lhs.m_used;

  MPoly q = even_part_in_squares(f.p);
  const double c = f.c.get_d();
  PointFn f0 = [&](const std::vector<double>& y) {
    double s = 0;
    for (double v : y) s += v;
    return cplx(q.eval(y) * std::exp(-c * s));
  };
  TruncationConfig trunc = cfg.trunc;
  if (trunc.max_degree <= 0) trunc.max_degree = default_series_degree(n);
  QuadratureSpec inner = cfg.inner;
  inner.axis_scale = c;
  const HankelPlan H = hankel_plan(f0, nu, inner, trunc, prm);
  // Outer integrand: (F^B f)(sqrt(y)), a Gaussian polynomial in y with rate 1/(4c).
  PointFn outer_fn = [&](const std::vector<double>& y) {
    CVec xi(n);
    for (int i = 0; i < n; ++i) xi[i] = std::sqrt(y[i]);
    auto r = dunkl_transform_B_even(H, xi);
    rep.inner_diagnostic = std::max(rep.inner_diagnostic, r.diagnostic);
    return r.value;
  };
  QuadratureSpec outer = cfg.outer;
  outer.axis_scale = 1 / (4 * c);
  auto z = integrate_orthant(outer_fn, beta, outer, prm);
  cplx G = gamma_n(beta, n, prm.kd());
  cplx pref = std::pow(2.0, double(n) * (2.0 * alpha - nu));
  rep.rhs = pref * z.value / G;
  rep.outer_diagnostic = std::abs(pref / G) * z.diagnostic;
  return rep;
}

struct WallachReport {
  cplx lhs, rhs;
  int m_used = 0;
};

// zeta_{k r} against the symmetrized tensor of the rank-r zeta of index k n with delta_0; n = 2, r = 1.
inline WallachReport wallach_discrete_check(int r, const GaussPoly& f_in, const QuadratureSpec& spec,
                                            const Params& prm) {
  if (prm.n != 2 || r != 1) throw std::invalid_argument("wallach_discrete_check: only n = 2, r = 1");
  GaussPoly f{symmetrize_WB(f_in.p), f_in.c};
  WallachReport rep;
  const cplx alpha = prm.kd() * r;
  auto z = zeta_distribution(f, alpha, -1, spec, prm);
  rep.lhs = z.value;
  rep.m_used = z.m_used;
  // Rank-one restrictions x -> f(x, 0) and x -> f(0, x); the rank-one zeta is k- and nu-free on even data.
  const Params p1{1, 0, Q(1, 2)};
  const cplx index = prm.kd() * prm.n;
  cplx s = 0;
  for (int keep = 0; keep < 2; ++keep) {
    MPoly restricted = f.p.restrict_zero(1 - keep);
    if (keep == 1) restricted = restricted.swap_vars(0, 1);
    GaussPoly g{restricted.truncate_vars(1), f.c};
    s += zeta_integral(g, index, spec, p1).value / gamma_n(index, 1, 0);
  }
  rep.rhs = s / 2.0;
  return rep;
}

// Type A Dunkl operator on Delta^s q (s exact): T_i(Delta^s q) = Delta^{s-1}(s (Delta/x_i) q + Delta T_i q).
struct DeltaPowerPoly {
  Q s;
  MPoly q;
};

inline DeltaPowerPoly apply_dunkl_A_delta_power(const DeltaPowerPoly& f, int i, const Params& prm) {
  const int n = prm.n;
  Composition a(n, 1);
  a[i] = 0;
  MPoly r = MPoly::monomial(a) * f.q * f.s + MPoly::delta(n) * apply_dunkl(f.q, i, Root::A, prm);
  return DeltaPowerPoly{f.s - 1, r};
}

// L_nu f0 = 4^n Delta^{1+mu0-nu} Delta(T^A) Delta^{nu-mu0} Delta(T^A) f0, returned as a polynomial.
inline MPoly apply_L_nu(const MPoly& f0, const Params& prm) {
  const int n = prm.n;
  MPoly g1 = apply_delta_dunkl(f0, Root::A, prm);
  DeltaPowerPoly h{prm.nu - prm.mu0(), g1};
  for (int i = 0; i < n; ++i) h = apply_dunkl_A_delta_power(h, i, prm);
  // Delta^{1+mu0-nu} Delta^{nu-mu0-n} q = Delta^{1-n} q
  MPoly q = h.q.divide_monomial(Composition(n, n - 1));
  Q four = 1;
  for (int j = 0; j < n; ++j) four *= 4;
  return q * four;
}

// Degree-D layer of 0K1(nu; w^2/2, z^2/2) in 2n variables (w block first).
inline MPoly bessel_layer_squared(int D, const Params& prm) {
  const int n = prm.n;
  MPoly h(2 * n);
  Q fact = 1;
  for (int j = 2; j <= D; ++j) fact *= j;
  const JackLayer& L = jack_layer(n, prm.k, D);
  for (auto& eta : L.comps) {
    MPoly Lw = jack_L(eta, prm);
    MPoly wpart(2 * n), zpart(2 * n);
    for (auto& [a, c] : Lw.terms()) {
      Composition ew(2 * n, 0), ez(2 * n, 0);
      Q scale = c;
      for (int i = 0; i < n; ++i) {
        ew[i] = 2 * a[i];
        ez[n + i] = 2 * a[i];
        for (int t = 0; t < a[i]; ++t) scale /= 2;
      }
      wpart.add_term(ew, scale);
      zpart.add_term(ez, scale);
    }
    Q coef = 1 / (pochhammer_gen(prm.nu, to_partition(eta), prm.k) * fact * L.L1.at(eta));
    h += wpart * zpart * coef;
  }
  return h;
}

}  // namespace dunkl
