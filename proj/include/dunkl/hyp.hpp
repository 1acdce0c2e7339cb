#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "jack.hpp"
#include "special.hpp"

namespace dunkl {

struct TruncationConfig {
  int max_degree = 20;
  double tail_tol = 1e-15;
};

enum class SeriesKind { K, F };

// pKq (kind K, over compositions with L_eta) or pFq (kind F, over partitions with C_lambda).
struct HypSpec {
  std::vector<cplx> a;
  std::vector<cplx> b;
  SeriesKind kind = SeriesKind::K;
};

struct SeriesValue {
  cplx value;
  double last_layer = 0;
  int degree_used = 0;
  bool tail_reached = false;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric copy of the L_eta (or C_lambda) polynomials of all degrees <= D, over a dense
// monomial index so that values at a point are shared between basis elements.
struct SeriesTable {
  int n = 0;
  int D = 0;
  std::vector<Composition> monos;
  struct Entry {
    int degree;
    Partition plus;
    double at_ones;
    std::vector<std::pair<int, double>> terms;
  };
  std::vector<Entry> entries;  // ordered by degree

  // Values of every monomial at x.
  template <class T>
  std::vector<T> monomial_values(const std::vector<T>& x) const {
    std::vector<std::vector<T>> pw(n, std::vector<T>(D + 1));
    for (int i = 0; i < n; ++i) {
      pw[i][0] = T(1);
      for (int e = 1; e <= D; ++e) pw[i][e] = pw[i][e - 1] * x[i];
    }
    std::vector<T> v(monos.size());
    for (std::size_t m = 0; m < monos.size(); ++m) {
      T s = pw[0][monos[m][0]];
      for (int i = 1; i < n; ++i) s *= pw[i][monos[m][i]];
      v[m] = s;
    }
    return v;
  }
};

inline const SeriesTable& series_table(int n, const Q& k, int D, SeriesKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::string, int, int>, std::shared_ptr<SeriesTable>> memo;
  auto key = std::make_tuple(n, k.get_str(), D, int(kind));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto T = std::make_shared<SeriesTable>();
  T->n = n;
  T->D = D;
  std::map<Composition, int> id;
  for (int d = 0; d <= D; ++d)
    for (auto& c : compositions(n, d)) {
      id[c] = static_cast<int>(T->monos.size());
      T->monos.push_back(c);
    }
  for (int d = 0; d <= D; ++d) {
    const JackLayer& L = jack_layer(n, k, d);
    auto add = [&](const Composition& idx, const MPoly& p, const Q& ones) {
      SeriesTable::Entry e{d, to_partition(idx), ones.get_d(), {}};
      for (auto& [a, c] : p.terms()) e.terms.emplace_back(id.at(a), c.get_d());
      T->entries.push_back(std::move(e));
    };
    if (kind == SeriesKind::K) {
      for (auto& eta : L.comps) add(eta, L.E.at(eta) * L.cL.at(eta), L.L1.at(eta));
    } else {
      for (auto& [lam, P] : L.P) add(lam, P * L.cC.at(lam), L.C1.at(lam));
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return *memo.emplace(key, T).first->second;
}

namespace detail {

inline void check_denominators(const std::vector<cplx>& b, int n, double k, int D) {
  for (auto& nu : b)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < std::max(D, 1); ++m)
        if (std::abs(nu - k * j + double(m)) < 1e-12)
          throw DomainError("hypergeometric denominator parameter is inadmissible");
}

inline cplx coefficient(const HypSpec& s, const Partition& plus, double k) {
  cplx c = 1;
  for (auto& a : s.a) c *= pochhammer_gen(a, plus, k);
  for (auto& b : s.b) c /= pochhammer_gen(b, plus, k);
  return c;
}

inline double norm_inf(const CVec& v) {
  double m = 0;
  for (auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

inline SeriesValue hyp_eval(const HypSpec& spec, const CVec& w, const CVec& z, const TruncationConfig& trunc,
                            const Params& prm) {
  const int n = prm.n;
  const double k = prm.kd();
  if (static_cast<int>(w.size()) != n || static_cast<int>(z.size()) != n)
    throw std::invalid_argument("hyp_eval: argument length mismatch");
  detail::check_denominators(spec.b, n, k, trunc.max_degree);
  if (spec.a.size() == spec.b.size() + 1 && detail::norm_inf(w) * detail::norm_inf(z) >= 1)
    throw DomainError("hyp_eval: p = q + 1 requires |w|_inf |z|_inf < 1");
  if (spec.a.size() > spec.b.size() + 1) throw DomainError("hyp_eval: p > q + 1 is not supported");

  const SeriesTable& T = series_table(n, prm.k, trunc.max_degree, spec.kind);
  auto vw = T.monomial_values(w);
  auto vz = T.monomial_values(z);
  SeriesValue out;
  cplx sum = 0, layer = 0;
  double biggest = 0, fact = 1;
  int cur = 0, quiet = 0;
  auto close_layer = [&](int d) {
    sum += layer;
    out.last_layer = std::abs(layer);
    out.degree_used = d;
    biggest = std::max(biggest, std::abs(layer));
    quiet = (std::abs(layer) <= trunc.tail_tol * std::abs(sum)) ? quiet + 1 : 0;
    layer = 0;
  };
  for (auto& e : T.entries) {
    if (e.degree != cur) {
      close_layer(cur);
      if (quiet >= 2 && cur >= 2) {
        out.tail_reached = true;
        break;
      }
      cur = e.degree;
      fact *= cur;
    }
    cplx lw = 0, lz = 0;
    for (auto& [m, c] : e.terms) {
      lw += c * vw[m];
      lz += c * vz[m];
    }
    layer += detail::coefficient(spec, e.plus, k) * lw * lz / (fact * e.at_ones);
  }
  if (!out.tail_reached) {
    close_layer(cur);
    out.tail_reached = quiet >= 1;
  }
  if (biggest > 1e6 * std::abs(sum)) throw IllConditioned("hyp_eval: cancellation, largest layer exceeds 1e6 x sum");
  out.value = sum;
  return out;
}

// The series as a polynomial in the first argument for fixed second argument z.
struct NumPoly {
  const SeriesTable* table = nullptr;
  std::vector<cplx> coef;  // indexed like table->monos

  template <class T>
  cplx operator()(const std::vector<T>& x) const {
    auto v = table->monomial_values(x);
    cplx s = 0;
    for (std::size_t m = 0; m < coef.size(); ++m)
      if (coef[m] != cplx(0)) s += coef[m] * v[m];
    return s;
  }
};

inline NumPoly hyp_poly_in_first(const HypSpec& spec, const CVec& z, int D, const Params& prm) {
  detail::check_denominators(spec.b, prm.n, prm.kd(), D);
  const SeriesTable& T = series_table(prm.n, prm.k, D, spec.kind);
  auto vz = T.monomial_values(z);
  NumPoly P{&T, std::vector<cplx>(T.monos.size(), 0)};
  double fact = 1;
  int cur = 0;
  for (auto& e : T.entries) {
    if (e.degree != cur) {
      cur = e.degree;
      fact *= cur;
    }
    cplx lz = 0;
    for (auto& [m, c] : e.terms) lz += c * vz[m];
    cplx s = detail::coefficient(spec, e.plus, prm.kd()) * lz / (fact * e.at_ones);
    for (auto& [m, c] : e.terms) P.coef[m] += s * c;
  }
  return P;
}

inline SeriesValue dunkl_kernel_A(const CVec& w, const CVec& z, const TruncationConfig& trunc, const Params& prm) {
  return hyp_eval(HypSpec{{}, {}, SeriesKind::K}, w, z, trunc, prm);
}

enum class BesselKind { E, J };

// E_nu(w, z) = 0K1(nu; w, -z), J_nu(w, z) = 0F1(nu; w, -z).
inline SeriesValue bessel_kernel(BesselKind kind, cplx nu, const CVec& w, const CVec& z, const TruncationConfig& trunc,
                                 const Params& prm) {
  CVec mz(z);
  for (auto& v : mz) v = -v;
  return hyp_eval(HypSpec{{}, {nu}, kind == BesselKind::E ? SeriesKind::K : SeriesKind::F}, w, mz, trunc, prm);
}

// log of Kummer's M(a, b, X) for X >= 0, a >= 0, b > 0.
inline double log_kummer_M(double a, double b, double X) {
  if (a == 0 || X == 0) return 0;
  if (X < 600) {
    double t = 1, s = 1;
    for (int m = 0; m < 100000; ++m) {
      t *= (a + m) / (b + m) * X / (m + 1);
      s += t;
      if (t < 1e-17 * s && m > X) break;
    }
    return std::log(s);
  }
  double t = 1, s = 1;
  for (int j = 0; j < 30; ++j) {
    double nt = t * (b - a + j) * (1 - a + j) / ((j + 1) * X);
    if (std::abs(nt) > std::abs(t)) break;
    t = nt;
    s += t;
    if (std::abs(t) < 1e-17) break;
  }
  return std::lgamma(b) - std::lgamma(a) + X + (a - b) * std::log(X) + std::log(s);
}

// Rank-one Dunkl kernel with multiplicity k: E_k(t, s) with u = t s.
inline double rank_one_kernel_log(double u, double k) {
  double a = u >= 0 ? k + 1 : k;
  return -std::abs(u) + log_kummer_M(a, 2 * k + 1, 2 * std::abs(u));
}

// E^A(x, y) for real arguments in closed form when n <= 2; the series otherwise.
inline double dunkl_kernel_A_real(const std::vector<double>& x, const std::vector<double>& y, const Params& prm,
                                  int series_degree = 30) {
  const int n = prm.n;
  if (n == 1) return std::exp(x[0] * y[0]);
  if (n == 2) {
    double A = (x[0] + x[1]) * (y[0] + y[1]) / 2;
    double u = (x[0] - x[1]) * (y[0] - y[1]) / 2;
    return std::exp(A + rank_one_kernel_log(u, prm.kd()));
  }
  CVec cx(x.begin(), x.end()), cy(y.begin(), y.end());
  return dunkl_kernel_A(cx, cy, TruncationConfig{series_degree, 1e-16}, prm).value.real();
}

}  // namespace dunkl
