#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "dunkl_ops.hpp"

namespace dunkl {

struct DegenerateMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using QMatrix = std::vector<std::vector<Q>>;

// Exact solve of A x = b by Gauss-Jordan elimination. A may have more rows than columns;
// the system must be consistent with full column rank.
inline std::vector<Q> solve_exact(QMatrix A, std::vector<Q> b) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  std::size_t row = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) throw std::domain_error("solve_exact: singular system");
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);
    Q inv = 1 / A[row][col];
    for (std::size_t c = col; c < n; ++c) A[row][c] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Q f = A[r][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[row][c];
      b[r] -= f * b[row];
    }
    pivcol.push_back(col);
    ++row;
  }
  if (pivcol.size() != n) throw std::domain_error("solve_exact: rank deficient");
  for (std::size_t r = row; r < m; ++r)
    if (b[r] != 0) throw std::domain_error("solve_exact: inconsistent system");
  return std::vector<Q>(b.begin(), b.begin() + n);
}

inline std::size_t rank_exact(QMatrix A) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[row]);
    for (std::size_t r = row + 1; r < m; ++r) {
      if (A[r][col] == 0) continue;
      Q f = A[r][col] / A[row][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[row][c];
    }
    ++row;
  }
  return row;
}

// All Jack data of one homogeneous degree for fixed (n, k).
struct JackLayer {
  int n = 0;
  Q k;
  int degree = 0;
  std::vector<Composition> comps;
  std::map<Composition, MPoly> E;
  std::map<Composition, std::vector<Q>> spectrum;  // eigenvalues of D_1..D_n on E_eta
  std::map<Partition, MPoly> P;
  std::map<Partition, Q> cC;     // C_lambda = cC * P_lambda
  std::map<Composition, Q> cL;   // L_eta = cL * E_eta
  std::map<Composition, Q> L1;   // L_eta(1)
  std::map<Partition, Q> C1;     // C_lambda(1)
};

inline Q eval_at_ones(const MPoly& q) {
  Q s = 0;
  for (auto& [a, c] : q.terms()) s += c;
  return s;
}

namespace detail {

inline MPoly from_vector(const std::vector<Composition>& basis, const std::vector<Q>& v) {
  MPoly p(basis.empty() ? 0 : static_cast<int>(basis[0].size()));
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

inline std::vector<MPoly> all_permutations_of(const MPoly& p, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MPoly> out;
  do {
    SignedPerm g = SignedPerm::identity(n);
    g.perm = perm;
    out.push_back(p.act(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::shared_ptr<JackLayer> build_layer(int n, const Q& k, int p) {
  auto L = std::make_shared<JackLayer>();
  L->n = n;
  L->k = k;
  L->degree = p;
  L->comps = compositions(n, p);
  const auto& basis = L->comps;
  const std::size_t N = basis.size();
  std::map<Composition, std::size_t> idx;
  for (std::size_t i = 0; i < N; ++i) idx[basis[i]] = i;

  Params prm{n, k, Q(1, 2)};
  // M[j][row][col]: coefficient of x^{basis[row]} in D_j x^{basis[col]}
  std::vector<QMatrix> M(n, QMatrix(N, std::vector<Q>(N, Q(0))));
  for (std::size_t col = 0; col < N; ++col) {
    MPoly m = MPoly::monomial(basis[col]);
    for (int j = 0; j < n; ++j) {
      MPoly img = apply_cherednik(m, j, prm);
      for (auto& [a, c] : img.terms()) M[j][idx.at(a)][col] = c;
    }
  }
  std::vector<std::vector<Q>> spec(N, std::vector<Q>(n));
  for (std::size_t i = 0; i < N; ++i)
    for (int j = 0; j < n; ++j) spec[i][j] = M[j][i][i];
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (spec[a] == spec[b]) throw DegenerateMultiplicity("repeated joint spectrum at k = " + k.get_str());

  // Generic combination D = sum c_j D_j with pairwise distinct diagonal.
  QMatrix D;
  std::vector<Q> d(N);
  for (int attempt = 1;; ++attempt) {
    if (attempt > 50) throw DegenerateMultiplicity("no separating combination of Cherednik operators");
    D.assign(N, std::vector<Q>(N, Q(0)));
    Q cj = 1;
    for (int j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
          if (M[j][r][c] != 0) D[r][c] += cj * M[j][r][c];
      cj *= attempt + 1;
    }
    for (std::size_t i = 0; i < N; ++i) d[i] = D[i][i];
    std::vector<Q> sorted(d);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }

  // Topological order of the support graph col -> row (row != col, D[row][col] != 0).
  std::vector<int> indeg(N, 0);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c && D[r][c] != 0) ++indeg[r];
  std::vector<std::size_t> order;
  std::vector<bool> done(N, false);
  while (order.size() < N) {
    bool progressed = false;
    for (std::size_t v = 0; v < N; ++v) {
      if (done[v] || indeg[v] != 0) continue;
      done[v] = true;
      order.push_back(v);
      progressed = true;
      for (std::size_t r = 0; r < N; ++r)
        if (r != v && D[r][v] != 0) --indeg[r];
    }
    if (!progressed) throw std::logic_error("Cherednik operators not triangular on the monomial basis");
  }
  std::vector<std::size_t> pos(N);
  for (std::size_t i = 0; i < N; ++i) pos[order[i]] = i;

  for (std::size_t e = 0; e < N; ++e) {
    std::vector<Q> v(N, Q(0));
    v[e] = 1;
    for (std::size_t t = pos[e] + 1; t < N; ++t) {
      std::size_t r = order[t];
      Q acc = 0;
      for (std::size_t c = 0; c < N; ++c)
        if (c != r && D[r][c] != 0 && v[c] != 0) acc += D[r][c] * v[c];
      if (acc == 0) continue;
      Q gap = d[e] - d[r];
      if (gap == 0) throw DegenerateMultiplicity("eigenvalue collision at k = " + k.get_str());
      v[r] = acc / gap;
    }
    for (int j = 0; j < n; ++j)
      for (std::size_t r = 0; r < N; ++r) {
        Q acc = 0;
        for (std::size_t c = 0; c < N; ++c)
          if (M[j][r][c] != 0 && v[c] != 0) acc += M[j][r][c] * v[c];
        if (acc != spec[e][j] * v[r]) throw DegenerateMultiplicity("eigen-relation fails at k = " + k.get_str());
      }
    L->E.emplace(basis[e], from_vector(basis, v));
    L->spectrum.emplace(basis[e], spec[e]);
  }

  for (auto& lam : partitions(n, p)) {
    MPoly s(n);
    for (auto& q : all_permutations_of(L->E.at(lam), n)) s += q;
    Q lead = s.coeff(lam);
    if (lead == 0) throw DegenerateMultiplicity("symmetrization vanishes at k = " + k.get_str());
    L->P.emplace(lam, s * Q(1 / lead));
  }

  // (x1 + ... + xn)^p in both bases.
  MPoly target = power_sum_linear(n).pow(p);
  {
    auto parts = partitions(n, p);
    QMatrix A(parts.size(), std::vector<Q>(parts.size()));
    std::vector<Q> b(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
      b[r] = target.coeff(parts[r]);
      for (std::size_t c = 0; c < parts.size(); ++c) A[r][c] = L->P.at(parts[c]).coeff(parts[r]);
    }
    auto x = solve_exact(A, b);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      L->cC.emplace(parts[c], x[c]);
      L->C1.emplace(parts[c], x[c] * eval_at_ones(L->P.at(parts[c])));
    }
  }
  {
    QMatrix A(N, std::vector<Q>(N));
    std::vector<Q> b(N);
    for (std::size_t r = 0; r < N; ++r) {
      b[r] = target.coeff(basis[r]);
      for (std::size_t c = 0; c < N; ++c) A[r][c] = L->E.at(basis[c]).coeff(basis[r]);
    }
    auto x = solve_exact(A, b);
    for (std::size_t c = 0; c < N; ++c) {
      L->cL.emplace(basis[c], x[c]);
      L->L1.emplace(basis[c], x[c] * eval_at_ones(L->E.at(basis[c])));
    }
  }
  return L;
}

}  // namespace detail

// Memoized per (n, k, degree). Fills are serialized; returned layers are immutable.
inline const JackLayer& jack_layer(int n, const Q& k, int p) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::string, int>, std::shared_ptr<JackLayer>> memo;
  auto key = std::make_tuple(n, k.get_str(), p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto layer = detail::build_layer(n, k, p);
  std::lock_guard<std::mutex> lock(mu);
  return *memo.emplace(key, layer).first->second;
}

inline const MPoly& nonsymmetric_jack(const Composition& eta, const Params& prm) {
  if (static_cast<int>(eta.size()) != prm.n) throw std::invalid_argument("nonsymmetric_jack: length mismatch");
  return jack_layer(prm.n, prm.k, degree(eta)).E.at(eta);
}

inline const MPoly& symmetric_jack(const Partition& lam, const Params& prm) {
  if (static_cast<int>(lam.size()) != prm.n || !is_partition(lam))
    throw std::invalid_argument("symmetric_jack: not a partition of length n");
  return jack_layer(prm.n, prm.k, degree(lam)).P.at(lam);
}

inline const std::map<Partition, Q>& normalize_C(int p, const Params& prm) { return jack_layer(prm.n, prm.k, p).cC; }
inline const std::map<Composition, Q>& normalize_L(int p, const Params& prm) { return jack_layer(prm.n, prm.k, p).cL; }

inline MPoly jack_C(const Partition& lam, const Params& prm) {
  const auto& L = jack_layer(prm.n, prm.k, degree(lam));
  return L.P.at(lam) * L.cC.at(lam);
}

inline MPoly jack_L(const Composition& eta, const Params& prm) {
  const auto& L = jack_layer(prm.n, prm.k, degree(eta));
  return L.E.at(eta) * L.cL.at(eta);
}

}  // namespace dunkl
