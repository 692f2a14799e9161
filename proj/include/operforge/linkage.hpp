#pragma once

#include <map>
#include <utility>
#include <vector>

#include "operforge/rootdata.hpp"

namespace operforge {

// Weight (-n delta) + mu + (critical level) of the affine algebra; mu in
// fundamental-weight coordinates.
struct AffineWeight {
  Rational n;
  Vec finite;
  friend bool operator==(const AffineWeight& a, const AffineWeight& b) { return a.n == b.n && a.finite == b.finite; }
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    return a.n != b.n ? a.n < b.n : a.finite < b.finite;
  }
};

Rational coroot_pairing(const RootDatum& rd, int k, const Vec& weight);  // <weight, coroot of alpha_k>
Vec root_to_weight(const RootDatum& rd, const std::vector<int>& beta);   // simple-root -> fundamental coordinates
// Simple-root coordinates of a weight given in fundamental coordinates.
Vec weight_to_root_coords(const RootDatum& rd, const Vec& weight);

// <lambda, alpha-check> is never a positive integer, checked both on the
// pairing and on the W-orbit; the two must agree.
bool is_antidominant_weight(const RootDatum& rd, const Vec& lambda);

constexpr int kDefaultChainDepth = 6;
constexpr int kDefaultCharacterDepth = 8;

// Weights reachable from `start` by Kac-Kazhdan steps at the critical level
// whose delta-degree grows by at most `depth`. Includes the start.
std::vector<AffineWeight> kk_chain_search(const RootDatum& rd, const AffineWeight& start, int depth,
                                          int max_depth = kDefaultChainDepth);
// The single-step successors used by kk_chain_search, with delta-degree <= bound.
std::vector<AffineWeight> kk_steps(const RootDatum& rd, const AffineWeight& mu, const Rational& bound);

bool verma_irreducible_critical(const RootDatum& rd, const Vec& lambda);
// Some chain from lambda reaches mu != lambda with lambda - mu in the
// nonnegative span of the simple roots.
bool chain_finds_submodule(const RootDatum& rd, const Vec& lambda, int depth = kDefaultChainDepth);

// kostant_project(-lambda - rho) on the Langlands dual algebra, whose
// Cartan subalgebra is the dual of ours.
CartanOrbitPoint central_character(char family, int rank, const Vec& lambda);

// Dimensions of weight spaces of the Verma module of highest weight lambda
// over the affine algebra at the critical level, keyed by (delta-degree n,
// lambda - mu in simple-root coordinates), for n <= depth and ht <= height.
struct CharacterTable {
  Vec lambda;
  int depth = 0, height = 0;
  bool loop_only = false;  // only the factors from g t^{-1}C[t^{-1}]
  std::map<std::pair<int, std::vector<int>>, long long> dims;

  long long at(int n, const std::vector<int>& beta) const;
  long long total_at_degree(int n) const;
};

CharacterTable verma_character(const RootDatum& rd, const Vec& lambda, int depth, int height, bool loop_only = false,
                               int max_depth = kDefaultCharacterDepth);

}  // namespace operforge
