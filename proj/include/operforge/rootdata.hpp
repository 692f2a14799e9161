#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "operforge/linalg.hpp"
#include "operforge/rational.hpp"

namespace operforge {

// Finite root system of a simple Lie algebra. Roots are written in
// simple-root coordinates; coweights in fundamental-coweight coordinates.
struct RootDatum {
  char family = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, coroot_i>
  Matrix gram;                           // (alpha_i, alpha_j); long roots have length 2
  // Ordered by height, then reverse-lexicographically, so the simple
  // roots come first as alpha_1, ..., alpha_r.
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> height;
  std::vector<int> exponents;  // ascending, with multiplicity
  long long weyl_order = 0;
  int coxeter_number = 0;

  int num_positive() const { return int(positive_roots.size()); }
  int find_root(const std::vector<int>& coeffs) const;  // positive roots only; -1 if absent
  Rational inner(const std::vector<int>& a, const std::vector<int>& b) const;
  int pairing(const std::vector<int>& beta, int i) const;  // <beta, coroot_i>
  Vec coroot(int k) const;  // coroot of positive root k in simple-coroot coordinates

  std::map<std::vector<int>, int> index;
};

// Throws PreconditionError for pairs outside A1.., B2.., C3.., D4.., E6-8, F4, G2.
RootDatum make_root_datum(char family, int rank);
// The root system of the Langlands dual: simple coroots become simple roots.
RootDatum make_dual_root_datum(const RootDatum& rd);

// Chevalley basis: e_alpha (root order), h_1..h_r, f_alpha (root order),
// with f_alpha = e_{-alpha} and [e_alpha, f_alpha] the coroot of alpha.
class ChevalleyAlgebra {
 public:
  struct Term {
    int index;
    Rational coeff;
  };

  explicit ChevalleyAlgebra(const RootDatum& rd);

  int dim() const { return 2 * npos_ + rank_; }
  int rank() const { return rank_; }
  int npos() const { return npos_; }
  int e(int k) const { return k; }
  int h(int i) const { return npos_ + i; }
  int f(int k) const { return npos_ + rank_ + k; }
  bool is_e(int a) const { return a < npos_; }
  bool is_h(int a) const { return a >= npos_ && a < npos_ + rank_; }
  bool is_f(int a) const { return a >= npos_ + rank_; }

  const std::string& label(int a) const { return labels_[a]; }
  int degree(int a) const { return degree_[a]; }
  int max_degree() const { return max_degree_; }
  // Basis indices of principal degree d, |d| <= max_degree.
  const std::vector<int>& degree_indices(int d) const { return by_degree_[d + max_degree_]; }

  const std::vector<Term>& bracket_basis(int a, int b) const { return table_[std::size_t(a) * dim() + b]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;

  // N_{r,s} with [e_r, e_s] = N_{r,s} e_{r+s}. Roots are signed ids:
  // k+1 for positive root k, -(k+1) for its negative.
  int structure_constant(int r, int s) const;
  std::pair<int, int> extraspecial(int k) const { return extraspecial_[k]; }

 private:
  int signed_root(const std::vector<int>& coeffs) const;  // 0 if not a root
  std::vector<int> coeffs_of(int r) const;

  int rank_ = 0, npos_ = 0, max_degree_ = 0;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<Rational> lengths_;
  std::vector<int> npos_table_;  // N for positive pairs, P*P
  std::vector<std::pair<int, int>> extraspecial_;
  std::vector<std::string> labels_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> by_degree_;
  std::vector<std::vector<Term>> table_;
};

// Point of h//W, in coordinates on the Kostant slice: blocks of V_can,d
// concatenated by increasing d.
struct CartanOrbitPoint {
  Vec coords;
  friend bool operator==(const CartanOrbitPoint& a, const CartanOrbitPoint& b) {
    return a.coords == b.coords;
  }
};

struct VcanBlock {
  int degree;
  int offset;  // position of the block in CartanOrbitPoint::coords
  std::vector<Vec> basis;
};

// Splitting b_d = [n_{d+1}, p_{-1}] + V_can,d for one principal degree d.
struct DegreeSolver {
  int degree = 0;
  std::vector<int> target;  // basis indices of b_d
  std::vector<int> source;  // basis indices of n_{d+1}
  int block = -1;           // V_can block of degree d, or -1
  Matrix inverse;

  // Writes the degree-d part of c as [u, p_{-1}] + v; returns u in g
  // coordinates and the coordinates of v in the block.
  std::pair<Vec, Vec> decompose(const Vec& c, int dim) const;
};

struct PrincipalData {
  Vec p_minus1, rho_check, two_rho_check, p1;  // vectors in g
  std::vector<Vec> fundamental_coweights;      // in simple-coroot coordinates
  std::vector<VcanBlock> vcan;
  int vcan_dim = 0;
  std::vector<DegreeSolver> solvers;  // index d = 0..max_degree
};

struct Algebra {
  RootDatum root;
  ChevalleyAlgebra lie;
  PrincipalData principal;

  Algebra(RootDatum rd);

  int dim() const { return lie.dim(); }
  int rank() const { return root.rank; }
  int coxeter() const { return root.coxeter_number; }

  Vec coweight_to_h(const Vec& fund) const;  // fundamental-coweight -> coroot coordinates
  Vec h_to_coweight(const Vec& hc) const;    // (<alpha_i, h>)_i
  Vec embed_h(const Vec& hc) const;          // element of g
  Vec h_part(const Vec& x) const;            // coroot coordinates of the h-component

  Vec vcan_vector(const CartanOrbitPoint& p) const;
  // Coordinates of x in V_can,d for the block of degree d; x must lie there.
  Vec vcan_block_coords(int block, const Vec& x) const;
  int vcan_block_of_degree(int d) const;

  Matrix cartan_inverse;
};

// Immutable and shared; repeated calls with the same type return the same instance.
std::shared_ptr<const Algebra> build_algebra(char family, int rank);
std::shared_ptr<const Algebra> build_dual_algebra(char family, int rank);

// exp(ad u) y for nilpotent u.
Vec ad_exp_apply(const ChevalleyAlgebra& g, const Vec& u, const Vec& y);

// The unique c in V_can with Ad_n(p_{-1} + x) = p_{-1} + c. When
// `witness` is given, it receives u_1, u_2, ... with n = exp(u_last)...exp(u_1).
CartanOrbitPoint kostant_project(const Algebra& alg, const Vec& x, std::vector<Vec>* witness = nullptr);

// sl_{n+1} by traceless (n+1)x(n+1) matrices, one per basis element.
std::vector<Matrix> type_a_realization(const Algebra& alg);
Matrix realize(const std::vector<Matrix>& rep, const Vec& x);

}  // namespace operforge
