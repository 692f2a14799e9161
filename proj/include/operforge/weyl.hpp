#pragma once

#include <vector>

#include "operforge/linalg.hpp"
#include "operforge/rootdata.hpp"

namespace operforge {

// w = s_{word[0]} s_{word[1]} ... ; the matrices act on column vectors of
// coroot coordinates (on h) and of fundamental-weight coordinates (on h*).
struct WeylElement {
  std::vector<int> word;
  Matrix on_h;
  Matrix on_weights;

  int length() const { return int(word.size()); }
  Vec apply_h(const Vec& hc) const { return on_h.apply(hc); }
  Vec apply_weight(const Vec& lam) const { return on_weights.apply(lam); }
};

Matrix simple_reflection_h(const RootDatum& rd, int i);
Matrix simple_reflection_weight(const RootDatum& rd, int i);
WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word);

// All of W by breadth-first search over left multiplication, so every word
// is reduced. Throws PreconditionError when |W| exceeds `limit`.
std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, long long limit = 100000);

// Number of positive roots sent to negative roots.
int inversion_count(const RootDatum& rd, const WeylElement& w);

// Weights in fundamental-weight coordinates; result sorted.
std::vector<Vec> weyl_orbit(const RootDatum& rd, const Vec& lambda);

// Coweights in fundamental-coweight coordinates. A pairing that is not an
// integer counts as both dominant and anti-dominant.
bool is_dominant(const RootDatum& rd, const Vec& coweight);
bool is_antidominant(const RootDatum& rd, const Vec& coweight);
Rational root_pairing(const RootDatum& rd, int k, const Vec& coweight);  // <alpha_k, coweight>

// Dimension of Sym(h*) modulo the ideal generated by W-invariants of
// positive degree, by linear algebra on monomials.
long long coinvariant_dim(const RootDatum& rd);

}  // namespace operforge
