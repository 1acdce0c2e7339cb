#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hyp.hpp"
#include "special.hpp"

namespace dunkl {

enum class Scheme { Auto, GaussLaguerre, TanhSinh };

struct QuadratureSpec {
  int points_per_axis = 80;
  Scheme scheme = Scheme::Auto;
  double axis_scale = 0;  // <= 0: probe the integrand
  int angular_points = 0;  // n = 2 polar rules; 0 means points_per_axis
};

struct QuadResult {
  cplx value;
  double diagnostic = 0;  // |I(N) - I(N/2)|
  long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using PointFn = std::function<cplx(const std::vector<double>&)>;

struct Rule {
  std::vector<double> x, w;
  std::vector<double> we;  // Laguerre only: w_i e^{x_i}
};

namespace detail {

inline Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
  const int N = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) J(i, i) = diag(i);
  for (int i = 0; i + 1 < N; ++i) J(i, i + 1) = J(i + 1, i) = off(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule r;
  for (int i = 0; i < N; ++i) {
    r.x.push_back(es.eigenvalues()(i));
    double v = es.eigenvectors()(0, i);
    r.w.push_back(mu0 * v * v);
  }
  return r;
}

template <class Build>
const Rule& cached_rule(int tag, int N, double a, double b, Build build) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double, double>, Rule> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(tag, N, a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, build()).first->second;
}

}  // namespace detail

// Nodes/weights for the weight x^alpha e^{-x} on (0, inf). Nodes from Golub-Welsch; weights from
// the closed form in L_{N+1}, in logs, since eigenvector components lose the tiny tail weights.
inline const Rule& gauss_laguerre(int N, double alpha) {
  if (alpha <= -1) throw QuadratureError("gauss_laguerre: alpha must exceed -1");
  return detail::cached_rule(0, N, alpha, 0, [&] {
    Eigen::VectorXd d(N), o(std::max(N - 1, 0));
    for (int i = 0; i < N; ++i) d(i) = 2 * i + alpha + 1;
    for (int i = 1; i < N; ++i) o(i - 1) = std::sqrt(i * (i + alpha));
    Rule r = detail::golub_welsch(d, o, std::tgamma(alpha + 1));
    const double lg = std::lgamma(N + alpha + 1) - std::lgamma(N + 1.0) - 2 * std::log(N + 1.0);
    // Returns L_{m}^{alpha}(x) for m = N - 1, N, N + 1 scaled by a common factor e^{-logscale}.
    auto laguerre = [&](double x, double& lm1, double& l, double& lp1, double& logscale) {
      double p0 = 1, p1 = 1 + alpha - x;
      logscale = 0;
      lm1 = p0;
      for (int m = 1; m <= N; ++m) {
        double p2 = ((2 * m + 1 + alpha - x) * p1 - (m + alpha) * p0) / (m + 1);
        p0 = p1;
        p1 = p2;
        if (m == N - 1) lm1 = p0;
        if (std::abs(p1) > 1e100) {
          p0 *= 1e-100;
          p1 *= 1e-100;
          lm1 *= 1e-100;
          logscale += 100 * std::log(10.0);
        }
      }
      l = p0;
      lp1 = p1;
    };
    for (int i = 0; i < N; ++i) {
      double x = r.x[i], lm1, l, lp1, ls;
      for (int it = 0; it < 2; ++it) {
        laguerre(x, lm1, l, lp1, ls);
        double dl = (N * l - (N + alpha) * lm1) / x;
        if (dl != 0) x -= l / dl;
      }
      laguerre(x, lm1, l, lp1, ls);
      r.x[i] = x;
      const double logw = lg + std::log(x) - 2 * (std::log(std::abs(lp1)) + ls);
      r.w[i] = std::exp(logw);
      r.we.push_back(std::exp(logw + x));
    }
    // The shared log-gamma prefactor carries the dominant rounding; fix it by the zeroth moment.
    double total = 0;
    for (double v : r.w) total += v;
    const double fix = std::tgamma(alpha + 1) / total;
    for (int i = 0; i < N; ++i) {
      r.w[i] *= fix;
      r.we[i] *= fix;
    }
    return r;
  });
}

// Nodes/weights for the weight (1-y)^a (1+y)^b on (-1, 1).
inline const Rule& gauss_jacobi(int N, double a, double b) {
  if (a <= -1 || b <= -1) throw QuadratureError("gauss_jacobi: exponents must exceed -1");
  return detail::cached_rule(1, N, a, b, [&] {
    Eigen::VectorXd d(N), o(std::max(N - 1, 0));
    for (int i = 0; i < N; ++i) {
      double s = 2 * i + a + b;
      d(i) = i == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
    }
    for (int i = 1; i < N; ++i) {
      double s = 2 * i + a + b;
      o(i - 1) = std::sqrt(4.0 * i * (i + a) * (i + b) * (i + a + b) / (s * s * (s + 1) * (s - 1)));
    }
    double mu0 = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
    return detail::golub_welsch(d, o, mu0);
  });
}

inline double omega_A(const std::vector<double>& x, double k) {
  if (k == 0) return 1;
  double w = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) w *= std::pow(std::abs(x[i] - x[j]), 2 * k);
  return w;
}

inline double delta(const std::vector<double>& x) {
  double d = 1;
  for (double v : x) d *= v;
  return d;
}

namespace detail {

// Decay rate per unit of sum(x) along the diagonal ray.
inline double probe_scale(const PointFn& f, int n) {
  double v1 = std::abs(f(std::vector<double>(n, 1.0)));
  double v2 = std::abs(f(std::vector<double>(n, 4.0)));
  if (!(v1 > 0) || !(v2 > 0) || !std::isfinite(v1) || !std::isfinite(v2)) return 1;
  double c = std::log(v1 / v2) / (3.0 * n);
  if (!std::isfinite(c)) return 1;
  return std::clamp(c, 0.05, 50.0);
}

struct DENodes {
  std::vector<double> x, xc, w;  // node, complement (distance to the finite right end), weight
};

// x = exp(t - e^{-t}) on (0, inf), suited to exponentially decaying integrands.
inline DENodes de_halfline(int N, double Tl, double Tr) {
  DENodes r;
  double h = (Tl + Tr) / (N - 1);
  for (int j = 0; j < N; ++j) {
    double t = -Tl + j * h;
    double e = std::exp(-t);
    double x = std::exp(t - e);
    r.x.push_back(x);
    r.xc.push_back(0);
    r.w.push_back(h * x * (1 + e));
  }
  return r;
}

// tanh-sinh on (0, L).
inline DENodes de_interval(int N, double T, double L) {
  DENodes r;
  double h = 2 * T / (N - 1);
  for (int j = 0; j < N; ++j) {
    double t = -T + j * h;
    double v = std::numbers::pi / 2 * std::sinh(t);
    r.x.push_back(L / (1 + std::exp(-2 * v)));
    r.xc.push_back(L / (1 + std::exp(2 * v)));
    double ch = std::cosh(v);
    r.w.push_back(h * L * std::numbers::pi / 2 * std::cosh(t) / (2 * ch * ch));
  }
  return r;
}

inline cplx imag_power(double base, double im) {
  if (im == 0) return 1;
  return std::exp(cplx(0, im * std::log(base)));
}

using NodeVisitor = std::function<void(const std::vector<double>&, cplx)>;

// Gauss nodes with weights for Delta^a omega^A: n = 1 Laguerre, n = 2 radial Laguerre x angular Jacobi.
inline void gauss_nodes(cplx a, int N, int Ns, double c, const Params& prm, const NodeVisitor& visit) {
  const int n = prm.n;
  const double k = prm.kd();
  const double ar = a.real(), ai = a.imag();
  if (n == 1) {
    const Rule& R = gauss_laguerre(N, ar);
    const double pref = std::pow(c, -ar - 1);
    for (int i = 0; i < N; ++i) {
      double x = R.x[i] / c;
      visit({x}, pref * R.we[i] * imag_power(x, ai));
    }
    return;
  }
  if (n != 2) throw QuadratureError("gauss_nodes: n <= 2 only");
  const double alpha_r = 2 * ar + 2 * k + 1;
  const Rule& R = gauss_laguerre(N, alpha_r);
  const Rule& S = gauss_jacobi(Ns, 2 * k, ar);
  const double pref = std::pow(c, -alpha_r - 1) * std::pow(4.0, -ar - 1) * std::pow(2.0, -2 * k);
  for (int i = 0; i < N; ++i) {
    const double r = R.x[i] / c;
    for (int j = 0; j < Ns; ++j) {
      const double sj = (1 + S.x[j]) / 4;
      const double x1 = r * sj, x2 = r * (1 - sj);
      cplx w = pref * R.we[i] * S.w[j] * std::pow(1 - sj, ar) * imag_power(x1 * x2, ai);
      visit({x1, x2}, w);
      visit({x2, x1}, w);
    }
  }
}

// Double-exponential nodes with the full weight evaluated at the nodes; radial variables are scaled by
// 1/c. stride 2 gives the nested half grid.
inline void de_nodes(cplx a, int N, int Ns, int stride, double c, const Params& prm, const NodeVisitor& visit) {
  const int n = prm.n;
  const double k = prm.kd();
  const double Tl = 4.5, Tr = 5.2, Ts = 3.2;
  auto R = de_halfline(N, Tl, Tr);
  for (auto& v : R.x) v /= c;
  for (auto& v : R.w) v *= stride / c;
  if (n == 1) {
    for (int i = 0; i < N; i += stride) visit({R.x[i]}, R.w[i] * std::pow(cplx(R.x[i]), a));
    return;
  }
  if (n == 2) {
    auto S = de_interval(Ns, Ts, 0.5);
    for (int i = 0; i < N; i += stride) {
      const double r = R.x[i];
      for (int j = 0; j < Ns; j += stride) {
        const double sj = S.x[j], gap = S.xc[j];  // gap = 1/2 - s
        const double x1 = r * sj, x2 = r * (1 - sj);
        cplx w = R.w[i] * S.w[j] * double(stride) * std::pow(cplx(r * r * sj * (1 - sj)), a) *
                 std::pow(2 * r * gap, 2 * k) * r;
        visit({x1, x2}, w);
        visit({x2, x1}, w);
      }
    }
    return;
  }
  // Chamber coordinates x_{sigma(n)} = u_1, x_{sigma(n-1)} = u_1 + u_2, ...: the differences
  // are coordinates, so the kinks of omega^A sit on the boundary.
  std::vector<int> idx(n, 0), perm(n);
  std::vector<double> y(n), x(n);
  while (true) {
    double w = 1, acc = 0;
    for (int i = 0; i < n; ++i) {
      w *= R.w[idx[i]];
      acc += R.x[idx[i]];
      y[n - 1 - i] = acc;  // y_1 > y_2 > ... > y_n
    }
    double om = 1, dl = 1;
    for (int i = 0; i < n; ++i) {
      dl *= y[i];
      for (int j = i + 1; j < n; ++j) om *= std::pow(y[i] - y[j], 2 * k);
    }
    const cplx wt = w * om * std::pow(cplx(dl), a);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int i = 0; i < n; ++i) x[perm[i]] = y[i];
      visit(x, wt);
    } while (std::next_permutation(perm.begin(), perm.end()));
    int p = 0;
    while (p < n && (idx[p] += stride) >= N) idx[p++] = 0;
    if (p == n) break;
  }
}

}  // namespace detail

// Auto: Gauss rules absorb only real powers, so a complex exponent goes to the double-exponential rule.
inline Scheme resolve_scheme(const QuadratureSpec& spec, const Params& prm, cplx mu = 0) {
  if (prm.n >= 3) return Scheme::TanhSinh;
  if (spec.scheme != Scheme::Auto) return spec.scheme;
  return mu.imag() == 0 ? Scheme::GaussLaguerre : Scheme::TanhSinh;
}

// Visits the nodes and weights of the rule for Delta(x)^{mu-mu0-1} omega^A(x) dx on R_+^n; coarse
// selects the lower-order companion rule used for the diagnostic. axis_scale must be set.
inline void orthant_nodes(cplx mu, const QuadratureSpec& spec, const Params& prm, bool coarse,
                          const detail::NodeVisitor& visit) {
  if (spec.points_per_axis < 2) throw QuadratureError("points_per_axis must be >= 2");
  if (!(spec.axis_scale > 0)) throw QuadratureError("orthant_nodes: axis_scale must be positive");
  const cplx a = mu - prm.mu0d() - 1.0;
  const double c = spec.axis_scale;
  const int Np = spec.points_per_axis;
  const int Nsp = spec.angular_points > 0 ? spec.angular_points : Np;
  if (resolve_scheme(spec, prm, mu) == Scheme::GaussLaguerre) {
    if (mu.real() <= prm.mu0d()) throw QuadratureError("integrate_orthant: Re mu must exceed mu0");
    if (coarse)
      detail::gauss_nodes(a, std::max(Np / 2, 2), std::max(Nsp / 2, 2), c, prm, visit);
    else
      detail::gauss_nodes(a, Np, Nsp, c, prm, visit);
  } else {
    detail::de_nodes(a, Np | 1, Nsp | 1, coarse ? 2 : 1, c, prm, visit);
  }
}

// int_{R_+^n} f(x) Delta(x)^{mu - mu0 - 1} omega^A(x) dx
inline QuadResult integrate_orthant(const PointFn& f, cplx mu, const QuadratureSpec& spec, const Params& prm) {
  QuadratureSpec s = spec;
  if (s.axis_scale <= 0) s.axis_scale = detail::probe_scale(f, prm.n);
  QuadResult out;
  cplx level[2] = {0, 0};
  for (int coarse = 0; coarse < 2; ++coarse)
    orthant_nodes(mu, s, prm, coarse, [&](const std::vector<double>& x, cplx w) {
      cplx v = f(x);
      ++out.evaluations;
      if (v != cplx(0)) level[coarse] += w * v;
    });
  out.value = level[0];
  out.diagnostic = std::abs(level[0] - level[1]);
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw QuadratureError("integrate_orthant: non-finite result");
  return out;
}

// int_{R^n} f(x) omega^B(x) dx through the orthant decomposition over Z_2^n.
inline QuadResult integrate_rn_B(const PointFn& f, cplx nu, const QuadratureSpec& spec, const Params& prm) {
  const int n = prm.n;
  if (nu.real() <= prm.mu0d() + 0.5) throw QuadratureError("integrate_rn_B: requires Re nu > mu0 + 1/2");
  PointFn g = [&](const std::vector<double>& x) {
    std::vector<double> y(n);
    cplx s = 0;
    for (int m = 0; m < (1 << n); ++m) {
      for (int i = 0; i < n; ++i) y[i] = ((m >> i) & 1 ? -1.0 : 1.0) * std::sqrt(x[i]);
      s += f(y);
    }
    return s / double(1 << n);
  };
  return integrate_orthant(g, nu, spec, prm);
}

struct InvarianceReport {
  double inversion = 0;  // |int h dmu - int h(1/x) dmu|
  double scaling = 0;    // |int h dmu - int h(s x) dmu|
  cplx reference;
};

// Invariance of Delta(x)^{-mu0-1} omega^A(x) dx under x -> 1/x and x -> s x.
inline InvarianceReport invariance_check_measure(const PointFn& h, double s, const QuadratureSpec& spec,
                                                 const Params& prm) {
  QuadratureSpec de = spec;
  de.scheme = Scheme::TanhSinh;
  auto base = integrate_orthant(h, 0.0, de, prm).value;
  PointFn inv = [&](const std::vector<double>& x) {
    std::vector<double> y(x);
    for (auto& v : y) v = 1 / v;
    return h(y);
  };
  PointFn sc = [&](const std::vector<double>& x) {
    std::vector<double> y(x);
    for (auto& v : y) v *= s;
    return h(y);
  };
  InvarianceReport r;
  r.reference = base;
  r.inversion = std::abs(base - integrate_orthant(inv, 0.0, de, prm).value);
  r.scaling = std::abs(base - integrate_orthant(sc, 0.0, de, prm).value);
  return r;
}

}  // namespace dunkl
