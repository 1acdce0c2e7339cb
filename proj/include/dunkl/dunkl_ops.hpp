#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "poly.hpp"

namespace dunkl {

// Multiplicities: k on the roots +-(e_i +- e_j), kprime = nu - mu0 - 1/2 on +-e_i.
struct Params {
  int n = 1;
  Q k = 0;
  Q nu = Q(1, 2);

  Q mu0() const { return k * (n - 1); }
  Q kprime() const { return nu - mu0() - Q(1, 2); }

  static Params from_kprime(int n, const Q& k, const Q& kprime) {
    return Params{n, k, kprime + k * (n - 1) + Q(1, 2)};
  }
  double kd() const { return k.get_d(); }
  double mu0d() const { return mu0().get_d(); }
};

enum class Root { A, B };

namespace detail {

// (X^a Y^b - X^b Y^a)/(X - Y) as a list of (exponent of X, exponent of Y, sign).
struct DDTerm {
  int ex, ey, sign;
};

inline void divided_difference(int a, int b, std::vector<DDTerm>& out) {
  out.clear();
  if (a == b) return;
  int sign = 1;
  if (a < b) {
    std::swap(a, b);
    sign = -1;
  }
  int m = b, d = a - b;
  for (int t = 0; t < d; ++t) out.push_back({m + t, m + d - 1 - t, sign});
}

}  // namespace detail

// T_i^R p, acting on the variable block [offset, offset + prm.n) of p.
inline MPoly apply_dunkl(const MPoly& p, int i, Root R, const Params& prm, int offset = 0) {
  const int N = p.nvars();
  const int n = prm.n;
  if (i < 0 || i >= n || offset + n > N) throw std::invalid_argument("apply_dunkl: axis out of range");
  const int gi = offset + i;
  const Q k = prm.k;
  const Q kp = prm.kprime();
  MPoly r(N);
  std::vector<detail::DDTerm> dd;
  Composition e;
  for (auto& [a, c] : p.terms()) {
    if (a[gi] > 0) {
      e = a;
      e[gi] -= 1;
      r.add_term(e, c * a[gi]);
    }
    if (k != 0) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const int gj = offset + j;
        // (p - s_ij p)/(x_i - x_j)
        detail::divided_difference(a[gi], a[gj], dd);
        for (auto& t : dd) {
          e = a;
          e[gi] = t.ex;
          e[gj] = t.ey;
          r.add_term(e, t.sign > 0 ? Q(k * c) : Q(-k * c));
        }
        if (R == Root::B) {
          // (p - tau_ij p)/(x_i + x_j) with tau_ij: x_i -> -x_j, x_j -> -x_i
          for (auto& t : dd) {
            e = a;
            e[gi] = t.ex;
            e[gj] = t.ey;
            int s = t.sign * (((a[gj] + t.ey) & 1) ? -1 : 1);
            r.add_term(e, s > 0 ? Q(k * c) : Q(-k * c));
          }
        }
      }
    }
    if (R == Root::B && kp != 0 && (a[gi] & 1)) {
      // (p - sigma_i p)/x_i
      e = a;
      e[gi] -= 1;
      r.add_term(e, 2 * kp * c);
    }
  }
  return r;
}

// Delta(T^R) = T_1 ... T_n.
inline MPoly apply_delta_dunkl(MPoly p, Root R, const Params& prm, int offset = 0) {
  for (int i = 0; i < prm.n; ++i) p = apply_dunkl(p, i, R, prm, offset);
  return p;
}

// q(T^R) p. The operators commute, so each monomial of q is applied axis by axis.
inline MPoly apply_poly_of_dunkl(const MPoly& q, const MPoly& p, Root R, const Params& prm) {
  const int n = prm.n;
  std::map<Composition, MPoly> memo;
  memo.emplace(Composition(n, 0), p);
  std::function<const MPoly&(const Composition&)> get = [&](const Composition& b) -> const MPoly& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    int last = n - 1;
    while (b[last] == 0) --last;
    Composition prev(b);
    prev[last] -= 1;
    MPoly v = apply_dunkl(get(prev), last, R, prm);
    return memo.emplace(b, std::move(v)).first->second;
  };
  MPoly r(p.nvars());
  for (auto& [b, c] : q.terms()) r += get(b) * c;
  return r;
}

// [p, q]^R = p(T^R) q evaluated at 0.
inline Q dunkl_pairing(const MPoly& p, const MPoly& q, Root R, const Params& prm) {
  return apply_poly_of_dunkl(p, q, R, prm).constant_term();
}

// Cherednik operator D_j = x_j T_j^A + k(1-n) + k sum_{i>j} s_ij.
inline MPoly apply_cherednik(const MPoly& p, int j, const Params& prm) {
  const int n = prm.n;
  MPoly r = MPoly::var(n, j) * apply_dunkl(p, j, Root::A, prm);
  r += p * Q(prm.k * (1 - n));
  for (int i = j + 1; i < n; ++i) r += p.swap_vars(i, j) * prm.k;
  return r;
}

struct MirrorProximity : std::domain_error {
  using std::domain_error::domain_error;
};

// Numeric parameters for the finite-difference Dunkl operator.
struct NumParams {
  int n = 1;
  double k = 0;
  double kprime = 0;
};

using RealFn = std::function<double(const std::vector<double>&)>;

// T_i^R f(x): central difference for the derivative, exact reflection quotients.
inline double apply_dunkl_numeric(const RealFn& f, const std::vector<double>& x, int i, Root R,
                                  const NumParams& prm, double h = 1e-4, bool richardson = false) {
  const int n = prm.n;
  auto guard = [&](double v) {
    if (std::abs(v) < 10 * h) throw MirrorProximity("apply_dunkl_numeric: point too close to a mirror");
  };
  auto deriv = [&](double step) {
    std::vector<double> xp(x), xm(x);
    xp[i] += step;
    xm[i] -= step;
    return (f(xp) - f(xm)) / (2 * step);
  };
  double d = deriv(h);
  if (richardson) d = (4 * deriv(h / 2) - d) / 3;
  const double fx = f(x);
  double s = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i || prm.k == 0) continue;
    double a = x[i] - x[j];
    guard(a);
    std::vector<double> y(x);
    std::swap(y[i], y[j]);
    s += prm.k * (fx - f(y)) / a;
    if (R == Root::B) {
      double b = x[i] + x[j];
      guard(b);
      std::vector<double> z(x);
      z[i] = -x[j];
      z[j] = -x[i];
      s += prm.k * (fx - f(z)) / b;
    }
  }
  if (R == Root::B && prm.kprime != 0) {
    guard(x[i]);
    std::vector<double> y(x);
    y[i] = -x[i];
    s += prm.kprime * (fx - f(y)) / x[i];
  }
  return d + s;
}

inline NumParams to_num(const Params& p) { return NumParams{p.n, p.k.get_d(), p.kprime().get_d()}; }

}  // namespace dunkl
