#pragma once

#include <vector>

#include "operforge/rootdata.hpp"
#include "operforge/series.hpp"

namespace operforge {

// One factor of a B((t)) gauge transformation: either an element of the
// adjoint torus prod_j omega_j-check(c_j), or exp(u) with u in n((t)).
struct GaugeFactor {
  enum class Kind { Torus, Unipotent } kind = Kind::Torus;
  std::vector<ScalarSeries> torus;  // c_j, one per fundamental coweight
  LieSeries unipotent;              // u, coordinates in g, supported on n

  static GaugeFactor from_torus(std::vector<ScalarSeries> c);
  static GaugeFactor from_exp(LieSeries u);
  // t^{lambda-check} for a coweight given in fundamental-coweight coordinates.
  static GaugeFactor cocharacter(const Vec& coweight);
};

// Factors act first to last, so the group element is g_last ... g_first.
struct GaugeElement {
  std::vector<GaugeFactor> factors;

  static GaugeElement identity() { return {}; }
  bool is_identity() const { return factors.empty(); }
  GaugeElement& then(GaugeFactor f) {
    factors.push_back(std::move(f));
    return *this;
  }
  // `cap` bounds the precision of inverted torus coordinates that are exact
  // but not monomials.
  GaugeElement inverse(int cap = ScalarSeries::kExact) const;
};

// h o g: apply g first, then h.
GaugeElement compose(const GaugeElement& h, const GaugeElement& g);

// Connection d/dt + A(t) transformed by g: A -> g A g^{-1} - (dg) g^{-1}.
LieSeries apply_gauge(const Algebra& alg, const LieSeries& A, const GaugeElement& g);
LieSeries apply_factor(const Algebra& alg, const LieSeries& A, const GaugeFactor& f);

// exp(ad u) applied to Y, for u with components only in n.
LieSeries ad_exp(const ChevalleyAlgebra& g, const LieSeries& u, const LieSeries& Y);

}  // namespace operforge
