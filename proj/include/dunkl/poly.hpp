#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Q = mpq_class;
using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Exponent vectors. A Partition is a Composition with weakly decreasing parts.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

inline int degree(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline Partition to_partition(Composition a) {
  std::sort(a.begin(), a.end(), std::greater<int>());
  return a;
}

inline bool is_partition(const Composition& a) {
  return std::is_sorted(a.begin(), a.end(), std::greater<int>()) && (a.empty() || a.back() >= 0);
}

// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Composition& a, const Composition& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Descending graded-lex; used as the storage order so printing starts at the leading term.
struct GradedLexDesc {
  bool operator()(const Composition& a, const Composition& b) const { return GradedLex{}(b, a); }
};

inline void enumerate_compositions(int n, int p, Composition& cur, int pos, std::vector<Composition>& out) {
  if (pos == n - 1) {
    cur[pos] = p;
    out.push_back(cur);
    return;
  }
  for (int a = p; a >= 0; --a) {
    cur[pos] = a;
    enumerate_compositions(n, p - a, cur, pos + 1, out);
  }
}

// All compositions of p with n parts, in descending lexicographic order.
inline std::vector<Composition> compositions(int n, int p) {
  std::vector<Composition> out;
  if (n == 0) {
    if (p == 0) out.push_back({});
    return out;
  }
  Composition cur(n, 0);
  enumerate_compositions(n, p, cur, 0, out);
  return out;
}

// Partitions of p with at most n parts, padded with zeros to length n.
inline std::vector<Partition> partitions(int n, int p) {
  std::vector<Partition> out;
  for (auto& c : compositions(n, p))
    if (is_partition(c)) out.push_back(c);
  return out;
}

inline Q parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  bool slash = false;
  if (i == t.size()) throw std::invalid_argument("bad rational: " + s);
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] == '/') {
      if (slash || j == i || j + 1 == t.size()) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  Q q(t);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

// Signed permutation g in S_n x Z_2^n acting linearly by (g x)_{perm[i]} = sign[i] * x_i.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(int n) {
    SignedPerm g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.sign.assign(n, 1);
    return g;
  }
  static SignedPerm transposition(int n, int i, int j) {
    auto g = identity(n);
    std::swap(g.perm[i], g.perm[j]);
    return g;
  }
  static SignedPerm flip(int n, int i) {
    auto g = identity(n);
    g.sign[i] = -1;
    return g;
  }
  // (this o g): apply g first.
  SignedPerm compose(const SignedPerm& g) const {
    SignedPerm h;
    int n = static_cast<int>(perm.size());
    h.perm.resize(n);
    h.sign.resize(n);
    for (int i = 0; i < n; ++i) {
      h.perm[i] = perm[g.perm[i]];
      h.sign[i] = sign[g.perm[i]] * g.sign[i];
    }
    return h;
  }
  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = T(sign[i]) * x[i];
    return y;
  }
};

class MPoly {
 public:
  using Terms = std::map<Composition, Q, GradedLexDesc>;

  MPoly() = default;
  explicit MPoly(int n) : n_(n) {}
  MPoly(int n, const Q& c) : n_(n) {
    if (c != 0) terms_[Composition(n, 0)] = c;
  }

  static MPoly monomial(const Composition& a, const Q& c = 1) {
    MPoly p(static_cast<int>(a.size()));
    if (c != 0) p.terms_[a] = c;
    return p;
  }
  static MPoly var(int n, int i) {
    Composition a(n, 0);
    a[i] = 1;
    return monomial(a);
  }
  // Delta(x) = x_1 ... x_n
  static MPoly delta(int n) { return monomial(Composition(n, 1)); }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (auto& [a, c] : terms_) d = std::max(d, dunkl::degree(a));
    return d;
  }

  Q coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Q(0) : it->second;
  }

  // Accumulate c*x^a, pruning zeros.
  void add_term(const Composition& a, const Q& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  MPoly& operator*=(const Q& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [a, c] : terms_) c *= s;
    }
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Q& s) { return a *= s; }
  friend MPoly operator*(const Q& s, MPoly a) { return a *= s; }
  MPoly operator-() const { return *this * Q(-1); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.n_);
    Composition e(a.n_);
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(int m) const {
    MPoly r(n_, 1);
    for (int i = 0; i < m; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Homogeneous part of degree d.
  MPoly layer(int d) const {
    MPoly r(n_);
    for (auto& [a, c] : terms_)
      if (dunkl::degree(a) == d) r.terms_.emplace(a, c);
    return r;
  }

  cplx eval(const CVec& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("eval: length mismatch");
    cplx s = 0;
    for (auto& [a, c] : terms_) {
      cplx m = c.get_d();
      for (int i = 0; i < n_; ++i)
        for (int e = 0; e < a[i]; ++e) m *= x[i];
      s += m;
    }
    return s;
  }

  double eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("eval: length mismatch");
    double s = 0;
    for (auto& [a, c] : terms_) {
      double m = c.get_d();
      for (int i = 0; i < n_; ++i)
        for (int e = 0; e < a[i]; ++e) m *= x[i];
      s += m;
    }
    return s;
  }

  Q eval_exact(const std::vector<Q>& x) const {
    Q s = 0;
    for (auto& [a, c] : terms_) {
      Q m = c;
      for (int i = 0; i < n_; ++i)
        for (int e = 0; e < a[i]; ++e) m *= x[i];
      s += m;
    }
    return s;
  }

  Q constant_term() const { return coeff(Composition(n_, 0)); }

  // p(x^2), exponents doubled.
  MPoly square_vars() const {
    MPoly r(n_);
    for (auto& [a, c] : terms_) {
      Composition b(a);
      for (auto& e : b) e *= 2;
      r.terms_.emplace(std::move(b), c);
    }
    return r;
  }

  // p o g^{-1}.
  MPoly act(const SignedPerm& g) const {
    MPoly r(n_);
    Composition b(n_);
    for (auto& [a, c] : terms_) {
      int s = 1;
      for (int i = 0; i < n_; ++i) {
        b[g.perm[i]] = a[i];
        if (g.sign[i] < 0 && (a[i] & 1)) s = -s;
      }
      r.add_term(b, s > 0 ? c : Q(-c));
    }
    return r;
  }

  MPoly swap_vars(int i, int j) const { return act(SignedPerm::transposition(n_, i, j)); }

  // Substitute x_i = 0.
  MPoly restrict_zero(int i) const {
    MPoly r(n_);
    for (auto& [a, c] : terms_)
      if (a[i] == 0) r.terms_.emplace(a, c);
    return r;
  }

  // Drop variables beyond the first m (they must not occur).
  MPoly truncate_vars(int m) const {
    MPoly r(m);
    for (auto& [a, c] : terms_) {
      for (int i = m; i < n_; ++i)
        if (a[i] != 0) throw std::invalid_argument("truncate_vars: variable present");
      r.terms_.emplace(Composition(a.begin(), a.begin() + m), c);
    }
    return r;
  }

  // Exact division by the monomial x^a; throws if some term is not divisible.
  MPoly divide_monomial(const Composition& a) const {
    MPoly r(n_);
    for (auto& [e, c] : terms_) {
      Composition b(e);
      for (int i = 0; i < n_; ++i) {
        b[i] -= a[i];
        if (b[i] < 0) throw std::domain_error("divide_monomial: not divisible");
      }
      r.terms_.emplace(std::move(b), c);
    }
    return r;
  }

  std::string to_string() const;
  static MPoly parse(const std::string& s, int n);

 private:
  void check(const MPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MPoly: variable count mismatch");
  }

  int n_ = 0;
  Terms terms_;
};

inline std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [a, c] : terms_) {
    bool neg = c < 0;
    Q mag = neg ? Q(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = dunkl::degree(a) == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (a[i] > 1) os << '^' << a[i];
      need_star = true;
    }
  }
  return os.str();
}

inline MPoly MPoly::parse(const std::string& s, int n) {
  MPoly p(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("MPoly::parse: ") + what + " at " + std::to_string(i));
  };
  auto read_int = [&]() {
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected integer");
    return s.substr(st, i - st);
  };
  skip();
  if (s.compare(i, std::string::npos, "0") == 0) return p;
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    Q c = 1;
    Composition a(n, 0);
    bool have_factor = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_int();
      if (i < s.size() && s[i] == '/') {
        ++i;
        num += "/" + read_int();
      }
      c = parse_rational(num);
      have_factor = true;
    }
    while (true) {
      skip();
      if (have_factor) {
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip();
        } else {
          break;
        }
      }
      if (i >= s.size() || s[i] != 'x') fail("expected variable");
      ++i;
      int v = std::stoi(read_int()) - 1;
      if (v < 0 || v >= n) fail("variable index out of range");
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = std::stoi(read_int());
      }
      a[v] += e;
      have_factor = true;
    }
    p.add_term(a, sign > 0 ? c : Q(-c));
  }
  return p;
}

inline MPoly power_sum_linear(int n) {
  MPoly s(n);
  for (int i = 0; i < n; ++i) s += MPoly::var(n, i);
  return s;
}

}  // namespace dunkl
