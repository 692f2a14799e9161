#include "operforge/miura.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace operforge {

namespace {

using SeriesMatrix = std::vector<std::vector<ScalarSeries>>;

SeriesMatrix smat_identity(int n) {
  SeriesMatrix m(n, std::vector<ScalarSeries>(n));
  for (int i = 0; i < n; ++i) m[i][i] = ScalarSeries::constant(1);
  return m;
}

SeriesMatrix smat_mul(const SeriesMatrix& a, const SeriesMatrix& b) {
  int n = int(a.size());
  SeriesMatrix c(n, std::vector<ScalarSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_exact_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].is_exact_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

SeriesMatrix smat_realize(const std::vector<Matrix>& rep, const LieSeries& x) {
  int n = rep.front().rows();
  SeriesMatrix m(n, std::vector<ScalarSeries>(n));
  for (int a = 0; a < x.dim(); ++a) {
    if (x[a].is_exact_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rep[a](i, j) != 0) m[i][j] += rep[a](i, j) * x[a];
  }
  return m;
}

// Matrix of one gauge factor in the defining representation of sl_{n+1}.
// omega_j-check(c) acts as diag(c, ..., c, 1, ..., 1) with j entries c.
SeriesMatrix factor_matrix(const std::vector<Matrix>& rep, const GaugeFactor& f) {
  int n = rep.front().rows();
  if (f.kind == GaugeFactor::Kind::Torus) {
    SeriesMatrix m(n, std::vector<ScalarSeries>(n));
    ScalarSeries d = ScalarSeries::constant(1);
    m[n - 1][n - 1] = d;
    for (int i = n - 2; i >= 0; --i) {
      d = d * f.torus[i];
      m[i][i] = d;
    }
    return m;
  }
  SeriesMatrix U = smat_realize(rep, f.unipotent), term = smat_identity(n), out = smat_identity(n);
  for (int k = 1; k < n; ++k) {
    term = smat_mul(term, U);
    for (auto& row : term)
      for (auto& s : row) s = Rational(1, k) * s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] += term[i][j];
  }
  return out;
}

SeriesMatrix gauge_matrix(const std::vector<Matrix>& rep, const GaugeElement& g) {
  SeriesMatrix m = smat_identity(rep.front().rows());
  for (const auto& f : g.factors) m = smat_mul(factor_matrix(rep, f), m);
  return m;
}

ScalarSeries minor(const SeriesMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = int(rows.size());
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  ScalarSeries det;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inv;
    ScalarSeries term = ScalarSeries::constant(inv % 2 ? -1 : 1);
    for (int i = 0; i < k && !term.is_exact_zero(); ++i) term = term * m[rows[i]][cols[p[i]]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// The k-plane with Pluecker coordinates P (indexed by sorted k-subsets):
// the vectors v with v ^ P = 0.
std::vector<Vec> plane_from_pluecker(int n, int k, const std::vector<std::vector<int>>& sets, const Vec& P) {
  auto bigger = subsets(n, k + 1);
  std::map<std::vector<int>, int> pos;
  for (std::size_t i = 0; i < bigger.size(); ++i) pos[bigger[i]] = int(i);
  Matrix m(int(bigger.size()), n);
  for (int v = 0; v < n; ++v)
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (P[s] == 0) continue;
      const auto& I = sets[s];
      if (std::find(I.begin(), I.end(), v) != I.end()) continue;
      // e_v ^ e_I = sign * e_{sorted}
      int before = int(std::count_if(I.begin(), I.end(), [&](int i) { return i < v; }));
      std::vector<int> J = I;
      J.insert(J.begin() + before, v);
      m(pos[J], v) += (before % 2 ? -1 : 1) * P[s];
    }
  return nullspace(m);
}

// rank of x restricted to rows >= i and columns >= j
int corner_rank(const Matrix& x, int i, int j) {
  int n = x.rows();
  Matrix s(n - i, n - j);
  for (int a = i; a < n; ++a)
    for (int b = j; b < n; ++b) s(a - i, b - j) = x(a, b);
  return rank(s);
}

// Permutation pi with B x B^- = B P_pi B^-, where P_pi e_c = e_{pi(c)}.
std::vector<int> relative_position(const Matrix& x) {
  int n = x.rows();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = corner_rank(x, i, j);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int c = 0;
        for (int col = j; col < n; ++col)
          if (p[col] >= i) ++c;
        ok = c == table[i][j];
      }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  throw Error("no permutation matches the rank table");
}

// Diagonal of an element of h (coroot coordinates) in sl_{n+1}.
Vec diagonal(const Vec& hc) {
  int r = int(hc.size());
  Vec d(r + 1);
  for (int m = 0; m <= r; ++m) d[m] = (m < r ? hc[m] : Rational(0)) - (m > 0 ? hc[m - 1] : Rational(0));
  return d;
}

void push_constant_exp(const Algebra& alg, LieSeries& A, GaugeElement& g, const Vec& u) {
  if (is_zero(u)) return;
  auto f = GaugeFactor::from_exp(LieSeries::constant(u));
  A = apply_factor(alg, A, f);
  g.then(std::move(f));
}

bool lower_triangular(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

bool HConnection::regular_singular() const {
  for (const auto& s : u)
    if (pole_order(s) > 1) return false;
  return true;
}

Vec HConnection::residue() const {
  Vec r;
  for (const auto& s : u) r.push_back(s.coeff(-1));
  return r;
}

LieSeries h_connection_series(const Algebra& alg, const HConnection& chi) {
  if (int(chi.u.size()) != alg.rank()) throw PreconditionError("H-connection has the wrong rank");
  LieSeries A(alg.dim());
  for (int i = 0; i < alg.rank(); ++i) A[alg.lie.h(i)] = chi.u[i];
  return A;
}

Canonicalization miura_transform_full(const Algebra& alg, const HConnection& chi) {
  RawOper raw;
  raw.phi.assign(alg.rank(), ScalarSeries::constant(1));
  raw.q = h_connection_series(alg, chi);
  return canonicalize(alg, raw);
}

CanonicalOper miura_transform(const Algebra& alg, const HConnection& chi) { return miura_transform_full(alg, chi).oper; }

ResidueDiagram check_residue_diagram(const Algebra& alg, const HConnection& chi) {
  if (!chi.regular_singular()) throw PreconditionError("H-connection has a pole of order > 1");
  ResidueDiagram out;
  out.lhs = res_rs(alg, miura_transform(alg, chi));
  out.rhs = kostant_project(alg, alg.embed_h(chi.residue()) - alg.principal.rho_check);
  out.equal = out.lhs == out.rhs;
  return out;
}

HConnection miura_inverse_dominant(const Algebra& alg, const CanonicalOper& C, const Vec& lambda) {
  const auto& g = alg.lie;
  const int r = alg.rank();
  if (int(lambda.size()) != r) throw PreconditionError("coweight has the wrong rank");
  Vec lam = alg.embed_h(alg.coweight_to_h(lambda));
  if (!(res_rs(alg, C) == kostant_project(alg, lam)))
    throw PreconditionError("residue does not match kostant_project(lambda)");

  // t^{rho-check} makes the pole simple; its residue is conjugate to p_{-1} + lambda.
  LieSeries A = canonical_connection(alg, C);
  GaugeElement gauge;
  A = apply_factor(alg, A, GaugeFactor::cocharacter(Vec(r, Rational(1))));
  if (A.valuation() < -1) throw PreconditionError("oper is not regular singular");
  Vec q0 = alg.principal.p_minus1 + lam;
  Vec R = A.coeff(-1);
  if (R != q0) {
    std::vector<Vec> w1, w2;
    kostant_project(alg, R - alg.principal.p_minus1, &w1);
    kostant_project(alg, lam, &w2);
    for (const auto& u : w1) push_constant_exp(alg, A, gauge, u);
    for (auto it = w2.rbegin(); it != w2.rend(); ++it) push_constant_exp(alg, A, gauge, -*it);
    if (A.coeff(-1) != q0) throw Error("constant conjugation missed the residue p_{-1} + lambda");
  }

  // A = q0/t + sum_k Q_k t^{k-1}; exp(t^k u) changes Q_k by [u, q0] - k u,
  // so solve (k + ad q0) u = Q_k modulo b^- with u in n.
  const int P = g.npos();
  auto n_prec = [&] {
    int p = ScalarSeries::kExact;
    for (int a = 0; a < P; ++a) p = std::min(p, A[g.e(a)].prec());
    return p;
  };
  if (n_prec() >= ScalarSeries::kExact) throw PreconditionError("inverse needs an oper known on a finite window");
  for (int k = 1; k <= n_prec(); ++k) {
    Vec c(P);
    bool zero = true;
    for (int a = 0; a < P; ++a) {
      c[a] = A[g.e(a)].coeff(k - 1);
      if (c[a] != 0) zero = false;
    }
    Matrix L(P, P);
    for (int b = 0; b < P; ++b) {
      Vec x = zero_vec(g.dim());
      x[g.e(b)] = 1;
      Vec y = scaled(x, k) + g.bracket(q0, x);
      for (int a = 0; a < P; ++a) L(a, b) = y[g.e(a)];
    }
    if (determinant(L) == 0)
      throw SingularRecursion(k, "recursion matrix k + ad q0 is singular at k = " + std::to_string(k) +
                                     "; lambda is not dominant");
    if (zero) continue;
    Vec sol = *solve_unique(L, c);
    LieSeries u(g.dim());
    for (int a = 0; a < P; ++a)
      if (sol[a] != 0) u[g.e(a)] = ScalarSeries::monomial(sol[a], k);
    auto f = GaugeFactor::from_exp(u);
    A = apply_factor(alg, A, f);
    gauge.then(std::move(f));
  }
  // Unknown coefficients of Q beyond the window reach h from this order on.
  for (int i = 0; i < r; ++i) A[g.h(i)] = A[g.h(i)].truncated(std::min(A[g.h(i)].prec(), n_prec()));
  A = apply_factor(alg, A, GaugeFactor::cocharacter(Vec(r, Rational(-1))));

  for (int a = 0; a < P; ++a) {
    if (!A[g.e(a)].is_zero()) throw Error("recursion left an n-component");
    ScalarSeries fa = a < r ? A[g.f(a)] - ScalarSeries::constant(1) : A[g.f(a)];
    if (!fa.is_zero()) throw Error("recursion changed the f-components");
  }
  HConnection chi;
  for (int i = 0; i < r; ++i) chi.u.push_back(A[g.h(i)]);
  return chi;
}

MiuraClass classify_miura_nilp(const Algebra& alg, const HConnection& chi) {
  if (!chi.regular_singular()) throw PreconditionError("H-connection has a pole of order > 1");
  Vec res = chi.residue();
  Vec rho = alg.h_part(alg.principal.rho_check);
  MiuraClass out;
  bool found = false;
  for (auto& w : enumerate_weyl(alg.root)) {
    Vec wr = w.apply_h(rho);
    if (rho - wr == res) {
      out.w = std::move(w);
      found = true;
      break;
    }
  }
  if (!found) throw PreconditionError("residue is not of the form rho-check - w(rho-check)");
  if (alg.root.family != 'A') return out;

  auto can = miura_transform_full(alg, chi);
  if (!is_nilpotent_oper(alg, can.oper)) throw Error("Miura transform is not a nilpotent oper");
  auto nf = nilp_normal_form(alg, can.oper);
  auto rep = type_a_realization(alg);
  const int n = alg.rank() + 1;
  SeriesMatrix M = gauge_matrix(rep, compose(nf.gauge, can.gauge));

  // The B^- flag is spanned by the trailing basis vectors; follow the span of
  // the last k columns of M(t) to t = 0 through leading Pluecker coordinates.
  std::vector<std::vector<Vec>> planes(n + 1);
  for (int k = 1; k < n; ++k) {
    std::vector<int> cols;
    for (int j = n - k; j < n; ++j) cols.push_back(j);
    auto sets = subsets(n, k);
    std::vector<ScalarSeries> minors;
    int v = ScalarSeries::kExact;
    for (const auto& I : sets) {
      minors.push_back(minor(M, I, cols));
      if (!minors.back().is_zero()) v = std::min(v, minors.back().valuation());
    }
    if (v == ScalarSeries::kExact) throw PrecisionError("Pluecker coordinates vanish on the window");
    Vec P;
    for (const auto& m : minors) P.push_back(m.coeff(v));
    planes[k] = plane_from_pluecker(n, k, sets, P);
    if (int(planes[k].size()) != k) throw Error("leading Pluecker vector is not decomposable");
  }

  for (int k = 1; k + 1 < n; ++k) {
    auto both = planes[k];
    both.insert(both.end(), planes[k + 1].begin(), planes[k + 1].end());
    if (rank(Matrix::from_columns(both, n)) != k + 1) throw Error("limit subspaces are not nested");
  }

  // Basis adapted to the flag: column n-k completes L_{k-1} to L_k.
  std::vector<Vec> cols;  // cols[k-1] spans L_k modulo L_{k-1}
  for (int k = 1; k <= n; ++k) {
    std::vector<Vec> cand = planes[k];
    if (k == n)
      for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = 1;
        cand.push_back(e);
      }
    for (const auto& c : cand) {
      std::vector<Vec> trial = cols;
      trial.push_back(c);
      if (rank(Matrix::from_columns(trial, n)) == k) {
        cols.push_back(c);
        break;
      }
    }
    if (int(cols.size()) != k) throw Error("limit subspaces are not nested");
  }
  Matrix x(n, n);
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < n; ++i) x(i, n - k) = cols[k - 1][i];
  out.limit_flag = x;
  out.position = relative_position(x);

  // Permutation of w: w e_m = e_{sigma(m)} on the diagonal of rho-check.
  Vec d = diagonal(rho), dw = diagonal(out.w.apply_h(rho));
  std::vector<int> sigma(n);
  for (int m = 0; m < n; ++m)
    sigma[m] = int(std::find(dw.begin(), dw.end(), d[m]) - dw.begin());
  // Position w means the flag lies in the B-orbit of w^{-1} B^-.
  std::vector<int> sigma_inv(n);
  for (int m = 0; m < n; ++m) sigma_inv[sigma[m]] = m;
  if (sigma_inv != out.position) throw Error("limit flag is not in position w");

  Matrix N = realize(rep, nf.residue_n);
  out.residue_in_flag = lower_triangular(*inverse(x) * N * x);
  if (!out.residue_in_flag) throw Error("limit flag does not contain the nilpotent residue");

  out.generic_away_from_zero = true;
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx;
    for (int j = i; j < n; ++j) idx.push_back(j);
    if (minor(M, idx, idx).is_zero()) out.generic_away_from_zero = false;
  }
  if (!out.generic_away_from_zero) throw Error("transported flag is not generic away from t = 0");
  out.verified = true;
  return out;
}

}  // namespace operforge
