#pragma once

#include <vector>

#include "operforge/gauge.hpp"
#include "operforge/rootdata.hpp"
#include "operforge/series.hpp"

namespace operforge {

// d/dt + sum_i phi_i f_i + q with q in b((t)).
struct RawOper {
  std::vector<ScalarSeries> phi;
  LieSeries q;  // coordinates in g; f-components must vanish
};

// d/dt + p_{-1} + v(t), one series per V_can coordinate (CartanOrbitPoint order).
struct CanonicalOper {
  std::vector<ScalarSeries> v;
  friend bool operator==(const CanonicalOper& a, const CanonicalOper& b) { return a.v == b.v; }
  bool agrees_with(const CanonicalOper& o) const;
};

struct Canonicalization {
  CanonicalOper oper;
  GaugeElement gauge;  // the raw connection gauged by this is the canonical one
};

LieSeries oper_connection(const Algebra& alg, const RawOper& raw);
RawOper raw_from_connection(const Algebra& alg, const LieSeries& A);
LieSeries canonical_connection(const Algebra& alg, const CanonicalOper& C);

Canonicalization canonicalize(const Algebra& alg, const RawOper& raw);
Canonicalization canonicalize_connection(const Algebra& alg, const LieSeries& A);

// v_d(t) -> c^{d+1} v_d(c t)
CanonicalOper loop_rotate(const Algebra& alg, const CanonicalOper& C, const Rational& c);

int pole_order(const ScalarSeries& s);
// Minimal k with pole order of v_d at most k(d+1) for every d.
int singularity_order(const Algebra& alg, const CanonicalOper& C);

// Top polar coefficients, with p_1/4 added in the degree-1 slot.
CartanOrbitPoint res_rs(const Algebra& alg, const CanonicalOper& C);

// The same point computed from the explicit residue of the connection
// gauged by t^{rho-check}.
struct DirectResidue {
  Vec residue;  // element of g
  CartanOrbitPoint point;
};
DirectResidue res_rs_direct(const Algebra& alg, const CanonicalOper& C);

CartanOrbitPoint nilpotent_point(const Algebra& alg);  // kostant_project(-rho-check)
bool is_nilpotent_oper(const Algebra& alg, const CanonicalOper& C);

// d/dt + sum_i t^{<alpha_i, lambda>} f_i + q(t)/t with q regular.
struct NilpOperForm {
  Vec lambda;            // fundamental-coweight coordinates; zero for nilpotent opers
  LieSeries connection;  // the whole connection
  LieSeries q;
  Vec residue_n;         // q(0)
  Vec levi_element;      // its image in the Levi together with the f_j, j in J
  GaugeElement gauge;    // canonical connection -> this form
};

NilpOperForm nilp_normal_form(const Algebra& alg, const CanonicalOper& C);
// lambda integral with lambda + rho-check dominant; C must have residue
// kostant_project(-lambda - rho-check).
NilpOperForm lambda_nilp_form(const Algebra& alg, const CanonicalOper& C, const Vec& lambda);

struct NilpResidue {
  Vec n;
  std::vector<int> ad_ranks;  // rank (ad n)^k, k = 1..h
  std::vector<int> jordan;    // type A only: block sizes in the defining representation
};
NilpResidue res_nilp(const Algebra& alg, const NilpOperForm& nf);
NilpResidue nilp_invariants(const Algebra& alg, const Vec& n);

// Basis of solutions of u' + [p_{-1} + v, u] = 0 mod t^N, one per basis
// vector of g as initial value.
std::vector<LieSeries> horizontal_sections(const Algebra& alg, const CanonicalOper& C, int N);

}  // namespace operforge
