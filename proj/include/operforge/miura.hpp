#pragma once

#include <string>
#include <vector>

#include "operforge/errors.hpp"
#include "operforge/oper.hpp"
#include "operforge/weyl.hpp"

namespace operforge {

// Drinfeld's recursion met k + ad q_0 singular on g/b^-.
class SingularRecursion : public PreconditionError {
 public:
  SingularRecursion(int k, const std::string& what) : PreconditionError(what), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

// d/dt + u(t), u in h((t)) in coroot coordinates.
struct HConnection {
  std::vector<ScalarSeries> u;

  bool regular_singular() const;  // pole order <= 1
  Vec residue() const;            // coefficient of t^{-1}
};

LieSeries h_connection_series(const Algebra& alg, const HConnection& chi);

// d/dt + p_{-1} + u(t), brought to canonical form.
Canonicalization miura_transform_full(const Algebra& alg, const HConnection& chi);
CanonicalOper miura_transform(const Algebra& alg, const HConnection& chi);

struct ResidueDiagram {
  CartanOrbitPoint lhs;  // res_rs(MT(chi))
  CartanOrbitPoint rhs;  // kostant_project(Res(chi) - rho-check)
  bool equal = false;
};
ResidueDiagram check_residue_diagram(const Algebra& alg, const HConnection& chi);

// Inverse of MT on opers with residue kostant_project(lambda), lambda dominant
// (fundamental-coweight coordinates). The result has residue lambda + rho-check.
HConnection miura_inverse_dominant(const Algebra& alg, const CanonicalOper& C, const Vec& lambda);

struct MiuraClass {
  WeylElement w;
  bool verified = false;  // flag check performed (type A)
  // Type A only: the limit flag, as a basis matrix whose last k columns span
  // its k-dimensional member, and the permutation of its relative position.
  Matrix limit_flag;
  std::vector<int> position;  // position[c] = row of the 1 in column c
  bool residue_in_flag = false;
  bool generic_away_from_zero = false;
};

// residue must be rho-check - w(rho-check) for some w.
MiuraClass classify_miura_nilp(const Algebra& alg, const HConnection& chi);

}  // namespace operforge
