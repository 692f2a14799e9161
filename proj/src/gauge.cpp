#include "operforge/gauge.hpp"

#include "operforge/errors.hpp"

namespace operforge {

GaugeFactor GaugeFactor::from_torus(std::vector<ScalarSeries> c) {
  GaugeFactor f;
  f.kind = Kind::Torus;
  f.torus = std::move(c);
  return f;
}

GaugeFactor GaugeFactor::from_exp(LieSeries u) {
  GaugeFactor f;
  f.kind = Kind::Unipotent;
  f.unipotent = std::move(u);
  return f;
}

GaugeFactor GaugeFactor::cocharacter(const Vec& coweight) {
  // alpha_j(t^lambda) = t^{<alpha_j, lambda>}, and the torus is adjoint.
  std::vector<ScalarSeries> c;
  for (const auto& x : coweight) {
    if (x.get_den() != 1) throw PreconditionError("cocharacter needs an integral coweight");
    c.push_back(ScalarSeries::monomial(1, int(x.get_num().get_si())));
  }
  return from_torus(std::move(c));
}

GaugeElement GaugeElement::inverse(int cap) const {
  GaugeElement out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->kind == GaugeFactor::Kind::Torus) {
      std::vector<ScalarSeries> c;
      for (const auto& x : it->torus) c.push_back(x.inverse(cap));
      out.factors.push_back(GaugeFactor::from_torus(std::move(c)));
    } else {
      out.factors.push_back(GaugeFactor::from_exp(-it->unipotent));
    }
  }
  return out;
}

GaugeElement compose(const GaugeElement& h, const GaugeElement& g) {
  GaugeElement out = g;
  out.factors.insert(out.factors.end(), h.factors.begin(), h.factors.end());
  return out;
}

LieSeries ad_exp(const ChevalleyAlgebra& g, const LieSeries& u, const LieSeries& Y) {
  for (int a = 0; a < g.dim(); ++a)
    if (!g.is_e(a) && !u[a].is_exact_zero()) throw PreconditionError("unipotent gauge factor must take values in n");
  LieSeries out = Y, term = Y;
  // ad u raises the principal degree, so the sum stops after 2h - 1 terms.
  for (int k = 1; k <= 2 * g.max_degree() + 2; ++k) {
    term = Rational(1, k) * bracket(g, u, term);
    if (term.is_exact_zero()) return out;
    out += term;
  }
  throw Error("ad_exp did not terminate");
}

namespace {

// (d e^u) e^{-u} = sum_k (ad u)^k u' / (k+1)!
LieSeries log_derivative(const ChevalleyAlgebra& g, const LieSeries& u) {
  LieSeries du = u.derivative();
  LieSeries out = du, term = du;
  for (int k = 1; k <= 2 * g.max_degree() + 2; ++k) {
    term = Rational(1, k + 1) * bracket(g, u, term);
    if (term.is_exact_zero()) return out;
    out += term;
  }
  throw Error("log_derivative did not terminate");
}

}  // namespace

LieSeries apply_factor(const Algebra& alg, const LieSeries& A, const GaugeFactor& f) {
  const auto& g = alg.lie;
  if (f.kind == GaugeFactor::Kind::Unipotent) return ad_exp(g, f.unipotent, A) - log_derivative(g, f.unipotent);

  const int r = alg.rank(), P = g.npos();
  if (int(f.torus.size()) != r) throw PreconditionError("torus factor has the wrong number of coordinates");
  // Precision of an exact non-monomial inverse is bounded by that of A.
  int cap = A.prec();
  std::vector<ScalarSeries> inv(r);
  for (int j = 0; j < r; ++j) inv[j] = f.torus[j].inverse(cap == ScalarSeries::kExact ? cap : cap + 8 * g.max_degree());
  LieSeries out = A;
  for (int k = 0; k < P; ++k) {
    if (A[g.e(k)].is_exact_zero() && A[g.f(k)].is_exact_zero()) continue;
    ScalarSeries up = ScalarSeries::constant(1), down = ScalarSeries::constant(1);
    const auto& beta = alg.root.positive_roots[k];
    for (int j = 0; j < r; ++j)
      for (int m = 0; m < beta[j]; ++m) {
        up = up * f.torus[j];
        down = down * inv[j];
      }
    if (!A[g.e(k)].is_exact_zero()) out[g.e(k)] = up * A[g.e(k)];
    if (!A[g.f(k)].is_exact_zero()) out[g.f(k)] = down * A[g.f(k)];
  }
  // (dh) h^{-1} = sum_j (c_j'/c_j) omega_j-check
  for (int j = 0; j < r; ++j) {
    if (f.torus[j].exact() && f.torus[j].is_monomial()) {
      int n = f.torus[j].lowest();
      if (n == 0) continue;
      for (int i = 0; i < r; ++i) {
        const Rational& w = alg.principal.fundamental_coweights[j][i];
        if (w != 0) out[g.h(i)] -= ScalarSeries::monomial(n * w, -1);
      }
      continue;
    }
    ScalarSeries ld = f.torus[j].derivative() * inv[j];
    for (int i = 0; i < r; ++i) {
      const Rational& w = alg.principal.fundamental_coweights[j][i];
      if (w != 0) out[g.h(i)] -= w * ld;
    }
  }
  return out;
}

LieSeries apply_gauge(const Algebra& alg, const LieSeries& A, const GaugeElement& g) {
  LieSeries out = A;
  for (const auto& f : g.factors) out = apply_factor(alg, out, f);
  return out;
}

}  // namespace operforge
