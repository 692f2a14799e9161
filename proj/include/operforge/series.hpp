#pragma once

#include <climits>
#include <vector>

#include "operforge/rational.hpp"

namespace operforge {

class ChevalleyAlgebra;

// Truncated Laurent series sum_{k < prec} c_k t^k over Q. Coefficients at
// degrees >= prec are unknown; asking for them throws PrecisionError.
// prec == kExact marks a series known exactly (a Laurent polynomial).
class ScalarSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  ScalarSeries() = default;  // exact zero
  static ScalarSeries zero(int prec = kExact);
  static ScalarSeries constant(const Rational& c, int prec = kExact);
  static ScalarSeries monomial(const Rational& c, int deg, int prec = kExact);
  // Coefficients c[0], c[1], ... at degrees lo, lo+1, ...
  static ScalarSeries from_coeffs(int lo, const Vec& c, int prec = kExact);

  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  bool is_exact_zero() const { return c_.empty() && exact(); }
  bool is_zero() const { return c_.empty(); }  // zero on the known window
  int valuation() const { return c_.empty() ? prec_ : lo_; }
  int lowest() const { return lo_; }               // first stored degree
  int highest() const { return lo_ + int(c_.size()) - 1; }  // last stored degree
  bool is_monomial() const { return c_.size() == 1; }

  Rational coeff(int k) const;
  Rational residue() const { return coeff(-1); }

  ScalarSeries truncated(int prec) const;
  ScalarSeries shifted(int k) const;             // t^k * f
  ScalarSeries derivative() const;
  ScalarSeries scale_variable(const Rational& c) const;  // f(c t)
  // Two-sided inverse. An exact series that is not a monomial has an
  // infinite inverse; `cap` then bounds the precision of the result.
  ScalarSeries inverse(int cap = kExact) const;
  ScalarSeries pow(int n, int cap = kExact) const;

  ScalarSeries& operator+=(const ScalarSeries& o);
  ScalarSeries& operator-=(const ScalarSeries& o);
  friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
  friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
  friend ScalarSeries operator-(const ScalarSeries& a);
  friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
  friend ScalarSeries operator*(const Rational& s, const ScalarSeries& a);
  friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) {
    return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  // Same coefficients on the common window.
  bool agrees_with(const ScalarSeries& o) const;

 private:
  void normalize();
  static int sat_add(int a, int b);

  int lo_ = 0;
  Vec c_;
  int prec_ = kExact;
};

// Series with coefficients in a fixed basis, one ScalarSeries per
// coordinate. Each coordinate carries its own window.
class LieSeries {
 public:
  LieSeries() = default;
  explicit LieSeries(int dim) : comp_(dim) {}
  static LieSeries constant(const Vec& x, int prec = ScalarSeries::kExact);
  static LieSeries times(const Vec& x, const ScalarSeries& f);  // x * f

  int dim() const { return int(comp_.size()); }
  ScalarSeries& operator[](int a) { return comp_[a]; }
  const ScalarSeries& operator[](int a) const { return comp_[a]; }

  int prec() const;
  int valuation() const;
  bool is_exact_zero() const;
  bool is_zero() const;
  Vec coeff(int k) const;
  LieSeries truncated(int prec) const;
  LieSeries shifted(int k) const;
  LieSeries derivative() const;

  LieSeries& operator+=(const LieSeries& o);
  LieSeries& operator-=(const LieSeries& o);
  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
  friend LieSeries operator-(const LieSeries& a);
  friend LieSeries operator*(const ScalarSeries& f, const LieSeries& x);
  friend LieSeries operator*(const Rational& s, const LieSeries& x);
  friend bool operator==(const LieSeries& a, const LieSeries& b) { return a.comp_ == b.comp_; }
  bool agrees_with(const LieSeries& o) const;

 private:
  std::vector<ScalarSeries> comp_;
};

LieSeries bracket(const ChevalleyAlgebra& g, const LieSeries& x, const LieSeries& y);
// [x, Y] for a constant x.
LieSeries bracket(const ChevalleyAlgebra& g, const Vec& x, const LieSeries& y);

}  // namespace operforge
