#pragma once

#include <array>
#include <map>
#include <random>
#include <vector>

#include "operforge/linkage.hpp"
#include "operforge/miura.hpp"
#include "operforge/oper.hpp"
#include "operforge/weyl.hpp"

namespace testing {

using namespace operforge;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(int bound = 3) {
    Rational r(uniform(-bound, bound), uniform(1, 3));
    r.canonicalize();
    return r;
  }
  Rational nonzero(int bound = 3) {
    for (;;) {
      Rational r = rational(bound);
      if (r != 0) return r;
    }
  }
  // Coefficients at degrees lo .. prec-1, roughly half of them zero.
  ScalarSeries series(int lo, int prec, int bound = 3) {
    Vec c;
    for (int k = lo; k < prec; ++k) c.push_back(coin() ? rational(bound) : Rational(0));
    return ScalarSeries::from_coeffs(lo, c, prec);
  }
  ScalarSeries polynomial(int lo, int hi, int bound = 3) {
    Vec c;
    for (int k = lo; k <= hi; ++k) c.push_back(coin() ? rational(bound) : Rational(0));
    return ScalarSeries::from_coeffs(lo, c);
  }
  ScalarSeries unit(int prec) {
    Vec c{nonzero()};
    for (int k = 1; k < prec; ++k) c.push_back(coin() ? rational() : Rational(0));
    return ScalarSeries::from_coeffs(0, c, prec);
  }
};

inline Vec basis_vector(int dim, int a) {
  Vec v = zero_vec(dim);
  v[a] = 1;
  return v;
}

// Raw oper with invertible phi and q in b[[t]] (regular when lo = 0).
inline RawOper random_raw(const Algebra& alg, Rng& rng, int prec, int lo = 0) {
  RawOper raw;
  for (int i = 0; i < alg.rank(); ++i) raw.phi.push_back(rng.unit(prec));
  raw.q = LieSeries(alg.dim());
  for (int a = 0; a < alg.dim(); ++a)
    if (!alg.lie.is_f(a)) raw.q[a] = rng.series(lo, prec);
  return raw;
}

inline GaugeElement random_gauge(const Algebra& alg, Rng& rng, int prec) {
  GaugeElement g;
  std::vector<ScalarSeries> c;
  for (int i = 0; i < alg.rank(); ++i) c.push_back(rng.unit(prec));
  g.then(GaugeFactor::from_torus(c));
  for (int rep = 0; rep < 2; ++rep) {
    LieSeries u(alg.dim());
    for (int k = 0; k < alg.lie.npos(); ++k) u[alg.lie.e(k)] = rng.series(0, prec);
    g.then(GaugeFactor::from_exp(u));
  }
  return g;
}

// Canonical oper with pole order of v_d at most `pole(d)`.
template <class F>
CanonicalOper random_canonical(const Algebra& alg, Rng& rng, int prec, F pole) {
  CanonicalOper C;
  for (const auto& b : alg.principal.vcan)
    for (std::size_t i = 0; i < b.basis.size(); ++i) C.v.push_back(rng.series(-pole(b.degree), prec));
  return C;
}

// Coefficients of det(x - M), constant term first, by Faddeev-LeVerrier.
inline Vec charpoly(const Matrix& m) {
  int n = m.rows();
  Vec c(n + 1);
  c[n] = 1;
  Matrix M(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix next = m * M;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    M = next;
    Matrix am = m * M;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

// Truncated Laurent polynomials for hand-rolled matrix oracles, known below prec.
struct Laurent {
  int prec = 0;
  std::map<int, Rational> c;

  Rational at(int k) const {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
  }
  static Laurent from(const ScalarSeries& s, int prec) {
    Laurent l;
    l.prec = prec;
    if (!s.is_zero())
      for (int k = s.lowest(); k <= s.highest() && k < prec; ++k)
        if (s.coeff(k) != 0) l.c[k] = s.coeff(k);
    return l;
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.prec = std::min(a.prec, b.prec);
    for (auto& [k, v] : a.c)
      if (k < r.prec) r.c[k] += v;
    for (auto& [k, v] : b.c)
      if (k < r.prec) r.c[k] += v;
    return r;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& [k, v] : r.c) v = -v;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    int va = a.c.empty() ? a.prec : a.c.begin()->first, vb = b.c.empty() ? b.prec : b.c.begin()->first;
    r.prec = std::min(a.prec + vb, b.prec + va);
    for (auto& [i, x] : a.c)
      for (auto& [j, y] : b.c)
        if (i + j < r.prec) r.c[i + j] += x * y;
    return r;
  }
  Laurent derivative() const {
    Laurent r;
    r.prec = prec - 1;
    for (auto& [k, v] : c)
      if (k != 0) r.c[k - 1] += v * k;
    return r;
  }
  bool zero() const {
    for (auto& [k, v] : c)
      if (v != 0) return false;
    return true;
  }
};

// Positive-affine-root exponents (delta-degree, beta) of the PBW generators of
// the negative part: g t^{-m} (m >= 1) and n^- (m = 0). Multisets of these are
// counted directly.
inline std::map<std::pair<int, std::vector<int>>, long long> pbw_character(const RootDatum& rd, int depth, int height,
                                                                          bool loop_only) {
  struct Gen {
    int m;
    std::vector<int> beta;
  };
  const int r = rd.rank, h = rd.coxeter_number;
  std::vector<Gen> gens;
  for (int m = loop_only ? 1 : 0; m <= depth; ++m) {
    for (const auto& a : rd.positive_roots) gens.push_back({m, a});  // f_alpha t^{-m}
    if (m == 0) continue;
    for (const auto& a : rd.positive_roots) {  // e_alpha t^{-m}
      std::vector<int> neg(a);
      for (int& x : neg) x = -x;
      gens.push_back({m, neg});
    }
    for (int i = 0; i < r; ++i) gens.push_back({m, std::vector<int>(r, 0)});  // h_i t^{-m}
  }
  auto aff = [&](int m, const std::vector<int>& b) {
    int s = m * h;
    for (int x : b) s += x;
    return s;
  };
  const int budget = depth * h + height;
  std::map<std::pair<int, std::vector<int>>, long long> out;
  std::vector<int> beta(r, 0);
  auto rec = [&](auto&& self, std::size_t idx, int n, int used) -> void {
    if (idx == gens.size()) {
      int ht = 0;
      for (int x : beta) ht += x;
      if (n <= depth && ht <= height) ++out[{n, beta}];
      return;
    }
    const Gen& g = gens[idx];
    int cost = aff(g.m, g.beta);
    int k = 0;
    for (;;) {
      self(self, idx + 1, n + k * g.m, used + k * cost);
      ++k;
      if (used + k * cost > budget || n + k * g.m > depth) break;
      for (int i = 0; i < r; ++i) beta[i] += g.beta[i];
    }
    for (int i = 0; i < r; ++i) beta[i] -= (k - 1) * g.beta[i];
  };
  rec(rec, 0, 0, 0);
  return out;
}

// sl2 connection in the defining representation: a h + b e + phi f.
struct Mat2 {
  Laurent m[2][2];
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

inline Laurent exact(const ScalarSeries& s) { return Laurent::from(s, 1 << 20); }

// g A g^{-1} - g' g^{-1} for g = [[1, x], [0, 1]], read back as (a, b, phi).
inline std::array<Laurent, 3> unipotent_oracle(const Laurent& a, const Laurent& b, const Laurent& phi, const Laurent& x) {
  Laurent one;
  one.prec = 1 << 20;
  one.c[0] = 1;
  Laurent zero;
  zero.prec = 1 << 20;
  Mat2 g{{{one, x}, {zero, one}}}, gi{{{one, -x}, {zero, one}}}, A{{{a, b}, {phi, -a}}};
  Mat2 r = mul(mul(g, A), gi);
  Mat2 dg{{{zero, x.derivative()}, {zero, zero}}};
  Mat2 s = mul(dg, gi);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = r.m[i][j] - s.m[i][j];
  return {r.m[0][0], r.m[0][1], r.m[1][0]};
}

// Equal coefficients below the smaller of the two precisions.
inline bool same(const ScalarSeries& s, const Laurent& l) {
  int n = std::min(s.prec(), l.prec);
  for (auto& [k, v] : l.c)
    if (k < n && s.coeff(k) != v) return false;
  if (!s.is_zero())
    for (int k = s.lowest(); k <= s.highest() && k < n; ++k)
      if (s.coeff(k) != l.at(k)) return false;
  return true;
}

}  // namespace testing
