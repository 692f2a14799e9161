#include "operforge/series.hpp"

#include <algorithm>

#include "operforge/errors.hpp"
#include "operforge/rootdata.hpp"

namespace operforge {

int ScalarSeries::sat_add(int a, int b) {
  if (a >= kExact || b >= kExact) return kExact;
  long long s = (long long)a + b;
  return s >= kExact ? kExact : int(s);
}

void ScalarSeries::normalize() {
  if (!exact()) {
    long long keep = (long long)prec_ - lo_;
    if (keep <= 0) c_.clear();
    else if ((long long)c_.size() > keep) c_.resize(std::size_t(keep));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + first);
    lo_ += int(first);
  }
  if (c_.empty()) lo_ = 0;
}

ScalarSeries ScalarSeries::zero(int prec) {
  ScalarSeries s;
  s.prec_ = prec;
  return s;
}

ScalarSeries ScalarSeries::constant(const Rational& c, int prec) { return monomial(c, 0, prec); }

ScalarSeries ScalarSeries::monomial(const Rational& c, int deg, int prec) {
  return from_coeffs(deg, Vec{c}, prec);
}

ScalarSeries ScalarSeries::from_coeffs(int lo, const Vec& c, int prec) {
  ScalarSeries s;
  s.lo_ = lo;
  s.c_ = c;
  s.prec_ = prec;
  s.normalize();
  return s;
}

Rational ScalarSeries::coeff(int k) const {
  if (k >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(k) + " is beyond the precision window (N = " + std::to_string(prec_) + ")");
  if (k < lo_ || k >= lo_ + int(c_.size())) return 0;
  return c_[k - lo_];
}

ScalarSeries ScalarSeries::truncated(int prec) const {
  ScalarSeries s = *this;
  s.prec_ = std::min(prec_, prec);
  s.normalize();
  return s;
}

ScalarSeries ScalarSeries::shifted(int k) const {
  ScalarSeries s = *this;
  if (!s.c_.empty()) s.lo_ += k;
  s.prec_ = exact() ? kExact : prec_ + k;
  return s;
}

ScalarSeries ScalarSeries::derivative() const {
  ScalarSeries s;
  s.prec_ = exact() ? kExact : prec_ - 1;
  s.lo_ = lo_ - 1;
  s.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * (lo_ + int(i));
  s.normalize();
  return s;
}

ScalarSeries ScalarSeries::scale_variable(const Rational& c) const {
  ScalarSeries s = *this;
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] *= rational_pow(c, lo_ + int(i));
  s.normalize();
  return s;
}

ScalarSeries ScalarSeries::inverse(int cap) const {
  if (c_.empty()) throw PrecisionError("cannot invert a series that vanishes on its window");
  const int v = lo_;
  if (exact() && c_.size() == 1) return monomial(1 / c_[0], -v);
  int prec = exact() ? cap : prec_ - 2 * v;
  prec = std::min(prec, cap);
  if (prec >= kExact) throw Error("inverse of an exact non-monomial series needs a precision cap");
  ScalarSeries out;
  out.prec_ = prec;
  out.lo_ = -v;
  int n = prec - (-v);  // number of coefficients of the result
  if (n <= 0) {
    out.c_.clear();
    out.normalize();
    return out;
  }
  out.c_.assign(std::size_t(n), Rational(0));
  Rational inv0 = 1 / c_[0];
  for (int k = 0; k < n; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k && j < int(c_.size()); ++j) s -= c_[j] * out.c_[k - j];
    out.c_[k] = s * inv0;
  }
  out.normalize();
  return out;
}

ScalarSeries ScalarSeries::pow(int n, int cap) const {
  if (n < 0) return inverse(cap).pow(-n, cap);
  ScalarSeries r = constant(1), b = *this;
  while (n > 0) {
    if (n & 1) r = (r * b).truncated(cap);
    n >>= 1;
    if (n) b = (b * b).truncated(cap);
  }
  return r;
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
  int prec = std::min(prec_, o.prec_);
  if (o.c_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (c_.empty()) {
    lo_ = o.lo_;
    c_ = o.c_;
    prec_ = prec;
    normalize();
    return *this;
  }
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(highest(), o.highest());
  Vec c(std::size_t(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
  lo_ = lo;
  c_ = std::move(c);
  prec_ = prec;
  normalize();
  return *this;
}

ScalarSeries operator-(const ScalarSeries& a) {
  ScalarSeries s = a;
  for (auto& x : s.c_) x = -x;
  return s;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) { return *this += -o; }

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  int prec = std::min(ScalarSeries::sat_add(a.prec_, b.valuation()), ScalarSeries::sat_add(b.prec_, a.valuation()));
  ScalarSeries s;
  s.prec_ = prec;
  if (a.c_.empty() || b.c_.empty()) return s;
  s.lo_ = a.lo_ + b.lo_;
  long long n = (long long)a.c_.size() + b.c_.size() - 1;
  if (!s.exact()) n = std::min<long long>(n, (long long)prec - s.lo_);
  if (n <= 0) {
    s.lo_ = 0;
    return s;
  }
  s.c_.assign(std::size_t(n), Rational(0));
  for (std::size_t i = 0; i < a.c_.size() && i < std::size_t(n); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size() && i + j < std::size_t(n); ++j)
      if (b.c_[j] != 0) s.c_[i + j] += a.c_[i] * b.c_[j];
  }
  s.normalize();
  return s;
}

ScalarSeries operator*(const Rational& k, const ScalarSeries& a) {
  if (k == 0) return ScalarSeries::zero(a.prec_);
  ScalarSeries s = a;
  for (auto& x : s.c_) x *= k;
  return s;
}

bool ScalarSeries::agrees_with(const ScalarSeries& o) const {
  int n = std::min(prec_, o.prec_);
  ScalarSeries a = truncated(n), b = o.truncated(n);
  return a.lo_ == b.lo_ && a.c_ == b.c_;
}

LieSeries LieSeries::constant(const Vec& x, int prec) {
  LieSeries s(int(x.size()));
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) s.comp_[a] = ScalarSeries::constant(x[a], prec);
    else s.comp_[a] = ScalarSeries::zero(prec);
  return s;
}

LieSeries LieSeries::times(const Vec& x, const ScalarSeries& f) {
  LieSeries s(int(x.size()));
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) s.comp_[a] = x[a] * f;
  return s;
}

int LieSeries::prec() const {
  int p = ScalarSeries::kExact;
  for (const auto& c : comp_) p = std::min(p, c.prec());
  return p;
}

int LieSeries::valuation() const {
  int v = ScalarSeries::kExact;
  for (const auto& c : comp_) v = std::min(v, c.valuation());
  return v;
}

bool LieSeries::is_exact_zero() const {
  for (const auto& c : comp_)
    if (!c.is_exact_zero()) return false;
  return true;
}

bool LieSeries::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

Vec LieSeries::coeff(int k) const {
  Vec v(comp_.size());
  for (std::size_t a = 0; a < comp_.size(); ++a) v[a] = comp_[a].coeff(k);
  return v;
}

LieSeries LieSeries::truncated(int prec) const {
  LieSeries s = *this;
  for (auto& c : s.comp_) c = c.truncated(prec);
  return s;
}

LieSeries LieSeries::shifted(int k) const {
  LieSeries s = *this;
  for (auto& c : s.comp_) c = c.shifted(k);
  return s;
}

LieSeries LieSeries::derivative() const {
  LieSeries s = *this;
  for (auto& c : s.comp_) c = c.derivative();
  return s;
}

LieSeries& LieSeries::operator+=(const LieSeries& o) {
  for (std::size_t a = 0; a < comp_.size(); ++a) comp_[a] += o.comp_[a];
  return *this;
}

LieSeries& LieSeries::operator-=(const LieSeries& o) {
  for (std::size_t a = 0; a < comp_.size(); ++a) comp_[a] -= o.comp_[a];
  return *this;
}

LieSeries operator-(const LieSeries& x) {
  LieSeries s = x;
  for (auto& c : s.comp_) c = -c;
  return s;
}

LieSeries operator*(const ScalarSeries& f, const LieSeries& x) {
  LieSeries s = x;
  for (auto& c : s.comp_)
    if (!c.is_exact_zero()) c = f * c;
  return s;
}

LieSeries operator*(const Rational& k, const LieSeries& x) {
  LieSeries s = x;
  for (auto& c : s.comp_) c = k * c;
  return s;
}

bool LieSeries::agrees_with(const LieSeries& o) const {
  if (dim() != o.dim()) return false;
  for (int a = 0; a < dim(); ++a)
    if (!comp_[a].agrees_with(o.comp_[a])) return false;
  return true;
}

LieSeries bracket(const ChevalleyAlgebra& g, const LieSeries& x, const LieSeries& y) {
  const int D = g.dim();
  LieSeries out(D);
  for (int a = 0; a < D; ++a) {
    if (x[a].is_exact_zero()) continue;
    for (int b = 0; b < D; ++b) {
      if (y[b].is_exact_zero()) continue;
      const auto& terms = g.bracket_basis(a, b);
      if (terms.empty()) continue;
      ScalarSeries p = x[a] * y[b];
      for (const auto& t : terms) out[t.index] += t.coeff * p;
    }
  }
  return out;
}

LieSeries bracket(const ChevalleyAlgebra& g, const Vec& x, const LieSeries& y) {
  const int D = g.dim();
  LieSeries out(D);
  for (int a = 0; a < D; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < D; ++b) {
      if (y[b].is_exact_zero()) continue;
      for (const auto& t : g.bracket_basis(a, b)) out[t.index] += (x[a] * t.coeff) * y[b];
    }
  }
  return out;
}

}  // namespace operforge
