#include "operforge/oper.hpp"

#include <algorithm>

#include "operforge/errors.hpp"

namespace operforge {

namespace {

ScalarSeries combine(const Matrix& m, int row, const LieSeries& A, const std::vector<int>& idx) {
  ScalarSeries s;
  for (std::size_t j = 0; j < idx.size(); ++j)
    if (m(row, int(j)) != 0) s += m(row, int(j)) * A[idx[j]];
  return s;
}

bool drop_from_witness(const LieSeries& u) { return u.is_zero(); }

int block_degree_of_coord(const Algebra& alg, int coord) {
  for (const auto& b : alg.principal.vcan)
    if (coord >= b.offset && coord < b.offset + int(b.basis.size())) return b.degree;
  throw Error("bad V_can coordinate");
}

}  // namespace

bool CanonicalOper::agrees_with(const CanonicalOper& o) const {
  if (v.size() != o.v.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].agrees_with(o.v[i])) return false;
  return true;
}

LieSeries oper_connection(const Algebra& alg, const RawOper& raw) {
  const auto& g = alg.lie;
  LieSeries A = raw.q;
  for (int k = 0; k < g.npos(); ++k)
    if (!raw.q[g.f(k)].is_zero()) throw PreconditionError("q must take values in b");
  for (int i = 0; i < alg.rank(); ++i) A[g.f(i)] = raw.phi[i];
  return A;
}

RawOper raw_from_connection(const Algebra& alg, const LieSeries& A) {
  const auto& g = alg.lie;
  RawOper raw;
  raw.q = A;
  for (int k = 0; k < g.npos(); ++k) {
    if (k < alg.rank()) {
      raw.phi.push_back(A[g.f(k)]);
    } else if (!A[g.f(k)].is_zero()) {
      throw PreconditionError("connection has a non-simple " + g.label(g.f(k)) + " component; not an oper");
    }
    raw.q[g.f(k)] = ScalarSeries();
  }
  return raw;
}

LieSeries canonical_connection(const Algebra& alg, const CanonicalOper& C) {
  const auto& pd = alg.principal;
  if (int(C.v.size()) != pd.vcan_dim) throw PreconditionError("canonical oper has the wrong number of coordinates");
  LieSeries A = LieSeries::constant(pd.p_minus1);
  for (int a = 0; a < A.dim(); ++a)
    if (pd.p_minus1[a] == 0) A[a] = ScalarSeries();
  for (const auto& b : pd.vcan)
    for (std::size_t k = 0; k < b.basis.size(); ++k) A += LieSeries::times(b.basis[k], C.v[b.offset + k]);
  return A;
}

Canonicalization canonicalize(const Algebra& alg, const RawOper& raw) {
  const auto& g = alg.lie;
  const auto& pd = alg.principal;
  for (const auto& p : raw.phi)
    if (p.is_zero()) throw PreconditionError("phi_i must be invertible on the window");
  LieSeries A = oper_connection(alg, raw);
  Canonicalization out;

  // Torus step: c_i = phi_i makes every phi_i equal to 1.
  bool trivial = true;
  for (const auto& p : raw.phi)
    if (!(p.exact() && p == ScalarSeries::constant(1))) trivial = false;
  if (!trivial) {
    auto f = GaugeFactor::from_torus(raw.phi);
    A = apply_factor(alg, A, f);
    for (int i = 0; i < alg.rank(); ++i) {
      if (!(A[g.f(i)] - ScalarSeries::constant(1)).is_zero()) throw Error("torus step failed to normalize phi");
      A[g.f(i)] = ScalarSeries::constant(1);
    }
    out.gauge.then(std::move(f));
  }

  // Degree d: write the b_d-part as [u, p_{-1}] + v and gauge by exp(-u).
  for (const auto& s : pd.solvers) {
    if (s.source.empty()) continue;
    LieSeries u(g.dim());
    for (std::size_t k = 0; k < s.source.size(); ++k) u[s.source[k]] = -combine(s.inverse, int(k), A, s.target);
    if (u.is_exact_zero()) continue;
    auto f = GaugeFactor::from_exp(u);
    A = apply_factor(alg, A, f);
    if (!drop_from_witness(u)) out.gauge.then(std::move(f));
  }

  out.oper.v.assign(pd.vcan_dim, ScalarSeries());
  for (const auto& s : pd.solvers) {
    int nsrc = int(s.source.size());
    for (int k = 0; k < nsrc; ++k)
      if (!combine(s.inverse, k, A, s.target).is_zero()) throw Error("canonical form: degree " + std::to_string(s.degree) + " not in V_can");
    if (s.block < 0) continue;
    const auto& b = pd.vcan[s.block];
    for (std::size_t k = 0; k < b.basis.size(); ++k)
      out.oper.v[b.offset + k] = combine(s.inverse, nsrc + int(k), A, s.target);
  }
  return out;
}

Canonicalization canonicalize_connection(const Algebra& alg, const LieSeries& A) {
  return canonicalize(alg, raw_from_connection(alg, A));
}

CanonicalOper loop_rotate(const Algebra& alg, const CanonicalOper& C, const Rational& c) {
  if (c == 0) throw PreconditionError("loop rotation needs c != 0");
  CanonicalOper out = C;
  for (std::size_t i = 0; i < C.v.size(); ++i) {
    int d = block_degree_of_coord(alg, int(i));
    out.v[i] = rational_pow(c, d + 1) * C.v[i].scale_variable(c);
  }
  return out;
}

int pole_order(const ScalarSeries& s) {
  if (s.prec() < 0) throw PrecisionError("polar part is not known on the window");
  return std::max(0, -s.valuation());
}

int singularity_order(const Algebra& alg, const CanonicalOper& C) {
  int k = 0;
  for (std::size_t i = 0; i < C.v.size(); ++i) {
    int d = block_degree_of_coord(alg, int(i));
    int p = pole_order(C.v[i]);
    k = std::max(k, (p + d) / (d + 1));
  }
  return k;
}

CartanOrbitPoint res_rs(const Algebra& alg, const CanonicalOper& C) {
  if (singularity_order(alg, C) > 1) throw PreconditionError("residue needs a regular singularity (order <= 1)");
  CartanOrbitPoint p{zero_vec(C.v.size())};
  for (std::size_t i = 0; i < C.v.size(); ++i) {
    int d = block_degree_of_coord(alg, int(i));
    p.coords[i] = C.v[i].coeff(-d - 1);
  }
  // Degree 1 is spanned by p_1 alone, at coordinate 0.
  p.coords[0] += Rational(1, 4);
  return p;
}

DirectResidue res_rs_direct(const Algebra& alg, const CanonicalOper& C) {
  if (singularity_order(alg, C) > 1) throw PreconditionError("residue needs a regular singularity (order <= 1)");
  LieSeries A = apply_factor(alg, canonical_connection(alg, C), GaugeFactor::cocharacter(Vec(alg.rank(), Rational(1))));
  if (A.valuation() < -1) throw Error("t^rho-check twist left a pole of order > 1");
  DirectResidue out;
  out.residue = A.coeff(-1);
  out.point = kostant_project(alg, out.residue - alg.principal.p_minus1);
  return out;
}

CartanOrbitPoint nilpotent_point(const Algebra& alg) { return kostant_project(alg, -alg.principal.rho_check); }

bool is_nilpotent_oper(const Algebra& alg, const CanonicalOper& C) {
  bool bound = true;
  for (std::size_t i = 0; i < C.v.size(); ++i)
    if (pole_order(C.v[i]) > block_degree_of_coord(alg, int(i))) bound = false;
  bool via_residue = singularity_order(alg, C) <= 1 && res_rs(alg, C) == nilpotent_point(alg);
  if (bound != via_residue) throw Error("nilpotency criteria disagree");
  return bound;
}

namespace {

bool ad_nilpotent(const ChevalleyAlgebra& g, const Vec& x) {
  Matrix a = g.ad(x), p = a;
  for (int k = 1; k <= g.dim(); ++k) {
    bool zero = true;
    for (int i = 0; i < p.rows() && zero; ++i)
      for (int j = 0; j < p.cols(); ++j)
        if (p(i, j) != 0) {
          zero = false;
          break;
        }
    if (zero) return true;
    p = p * a;
  }
  return false;
}

void push_constant_exp(const Algebra& alg, LieSeries& A, GaugeElement& g, const Vec& u) {
  if (is_zero(u)) return;
  auto f = GaugeFactor::from_exp(LieSeries::constant(u));
  for (int a = 0; a < int(u.size()); ++a)
    if (u[a] == 0) f.unipotent[a] = ScalarSeries();
  A = apply_factor(alg, A, f);
  g.then(std::move(f));
}

}  // namespace

NilpOperForm lambda_nilp_form(const Algebra& alg, const CanonicalOper& C, const Vec& lambda) {
  const auto& g = alg.lie;
  const auto& pd = alg.principal;
  const int r = alg.rank();
  if (int(lambda.size()) != r) throw PreconditionError("coweight has the wrong rank");
  Vec mu(r);
  for (int i = 0; i < r; ++i) {
    if (lambda[i].get_den() != 1) throw PreconditionError("lambda must be an integral coweight");
    mu[i] = lambda[i] + 1;
    if (mu[i] < 0) throw PreconditionError("lambda + rho-check must be dominant");
  }
  Vec mu_h = alg.embed_h(alg.coweight_to_h(mu));
  if (!(res_rs(alg, C) == kostant_project(alg, -mu_h)))
    throw PreconditionError("residue does not match kostant_project(-lambda - rho-check)");

  NilpOperForm nf;
  nf.lambda = lambda;
  LieSeries A = canonical_connection(alg, C);
  auto twist = GaugeFactor::cocharacter(Vec(r, Rational(1)));
  A = apply_factor(alg, A, twist);
  nf.gauge.then(std::move(twist));

  // Conjugate the residue into p_{-1} - mu by a constant element of N.
  Vec R = A.coeff(-1), T = pd.p_minus1 - mu_h;
  if (R != T) {
    std::vector<Vec> w1, w2;
    kostant_project(alg, R - pd.p_minus1, &w1);
    kostant_project(alg, T - pd.p_minus1, &w2);
    for (const auto& u : w1) push_constant_exp(alg, A, nf.gauge, u);
    for (auto it = w2.rbegin(); it != w2.rend(); ++it) push_constant_exp(alg, A, nf.gauge, -*it);
    if (A.coeff(-1) != T) throw Error("constant conjugation missed the residue p_{-1} - mu");
  }

  // Grading by mu; write the connection as t^{-1}(p_{-1} - mu + Q(t)).
  std::vector<int> mudeg(g.dim(), 0);
  int K = 0;
  for (int k = 0; k < g.npos(); ++k) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += alg.root.positive_roots[k][j] * int(mu[j].get_num().get_si());
    mudeg[g.e(k)] = s;
    mudeg[g.f(k)] = -s;
    K = std::max(K, s);
  }
  Vec pJ = zero_vec(g.dim());
  for (int j = 0; j < r; ++j)
    if (mu[j] == 0) pJ[g.f(j)] = 1;

  // Make t^{-k} Q_k regular: at stage d kill [t^d] Q_k for k > d, from
  // the top degree down, solving (k - d) u + [u, p_J] = -[t^d] Q_k.
  for (int d = 1; d < K; ++d)
    for (int k = K; k > d; --k) {
      std::vector<int> idx;
      for (int a = 0; a < g.npos(); ++a)
        if (mudeg[g.e(a)] == k) idx.push_back(g.e(a));
      if (idx.empty()) continue;
      Vec c(idx.size());
      bool zero = true;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        c[i] = -A[idx[i]].coeff(d - 1);
        if (c[i] != 0) zero = false;
      }
      if (zero) continue;
      Matrix L(int(idx.size()), int(idx.size()));
      for (std::size_t col = 0; col < idx.size(); ++col) {
        Vec x = zero_vec(g.dim());
        x[idx[col]] = 1;
        Vec y = scaled(x, k - d) + g.bracket(x, pJ);
        for (std::size_t i = 0; i < idx.size(); ++i) L(int(i), int(col)) = y[idx[i]];
      }
      auto sol = solve_unique(L, c);
      if (!sol) throw Error("key equation is not uniquely solvable");
      LieSeries u(g.dim());
      for (std::size_t i = 0; i < idx.size(); ++i)
        if ((*sol)[i] != 0) u[idx[i]] = ScalarSeries::monomial((*sol)[i], d);
      auto f = GaugeFactor::from_exp(u);
      A = apply_factor(alg, A, f);
      nf.gauge.then(std::move(f));
    }

  auto untwist = GaugeFactor::cocharacter(-mu);
  A = apply_factor(alg, A, untwist);
  nf.gauge.then(std::move(untwist));
  nf.connection = A;

  LieSeries q = A;
  for (int i = 0; i < r; ++i) {
    int li = int(lambda[i].get_num().get_si());
    if (!(A[g.f(i)] - ScalarSeries::monomial(1, li)).is_zero()) throw Error("normal form has unexpected f-coefficients");
    q[g.f(i)] = ScalarSeries();
  }
  q = q.shifted(1);
  if (q.valuation() < 0) throw Error("normal form has a pole of order > 1");
  nf.q = q;
  nf.residue_n = q.coeff(0);
  for (int i = 0; i < r; ++i)
    if (nf.residue_n[g.h(i)] != 0)
      throw PreconditionError("residue has a nonzero h" + std::to_string(i + 1) + " component; not in n");

  // Levi condition: sum_{j in J} f_j + q(0) mod n_J must be nilpotent in m_J.
  nf.levi_element = pJ;
  for (int a = 0; a < g.dim(); ++a)
    if (mudeg[a] == 0 && !g.is_f(a)) nf.levi_element[a] += nf.residue_n[a];
  if (!ad_nilpotent(g, nf.levi_element)) throw Error("Levi component of the residue is not nilpotent");
  return nf;
}

NilpOperForm nilp_normal_form(const Algebra& alg, const CanonicalOper& C) {
  if (!is_nilpotent_oper(alg, C)) throw PreconditionError("oper is not nilpotent");
  return lambda_nilp_form(alg, C, zero_vec(alg.rank()));
}

NilpResidue nilp_invariants(const Algebra& alg, const Vec& n) {
  const auto& g = alg.lie;
  NilpResidue out;
  out.n = n;
  Matrix a = g.ad(n), p = a;
  for (int k = 1; k <= alg.coxeter(); ++k) {
    out.ad_ranks.push_back(rank(p));
    p = p * a;
  }
  if (alg.root.family == 'A') {
    Matrix m = realize(type_a_realization(alg), n);
    int size = m.rows();
    std::vector<int> rk{size};
    Matrix pw = Matrix::identity(size);
    for (int k = 1; k <= size; ++k) {
      pw = pw * m;
      rk.push_back(rank(pw));
    }
    // #blocks of size >= k is rk[k-1] - rk[k]
    for (int k = size; k >= 1; --k) {
      int ge_k = rk[k - 1] - rk[k];
      int ge_k1 = k + 1 <= size ? rk[k] - rk[k + 1] : 0;
      for (int c = 0; c < ge_k - ge_k1; ++c) out.jordan.push_back(k);
    }
  }
  return out;
}

NilpResidue res_nilp(const Algebra& alg, const NilpOperForm& nf) { return nilp_invariants(alg, nf.residue_n); }

std::vector<LieSeries> horizontal_sections(const Algebra& alg, const CanonicalOper& C, int N) {
  if (N < 1) throw PreconditionError("depth must be at least 1");
  if (singularity_order(alg, C) != 0) throw PreconditionError("horizontal sections need a regular oper");
  const auto& g = alg.lie;
  const int D = g.dim();
  LieSeries A = canonical_connection(alg, C);
  std::vector<Vec> Ai;
  for (int i = 0; i + 1 < N; ++i) Ai.push_back(A.coeff(i));
  std::vector<LieSeries> out;
  for (int a = 0; a < D; ++a) {
    std::vector<Vec> u{zero_vec(D)};
    u[0][a] = 1;
    for (int n = 0; n + 1 < N; ++n) {
      Vec s = zero_vec(D);
      for (int i = 0; i <= n; ++i) s = s + g.bracket(Ai[i], u[n - i]);
      u.push_back(scaled(s, Rational(-1, n + 1)));
    }
    LieSeries sol(D);
    for (int b = 0; b < D; ++b) {
      Vec c(N);
      for (int n = 0; n < N; ++n) c[n] = u[n][b];
      sol[b] = ScalarSeries::from_coeffs(0, c, N);
    }
    out.push_back(sol);
  }
  return out;
}

}  // namespace operforge
