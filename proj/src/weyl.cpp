#include "operforge/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "operforge/errors.hpp"

namespace operforge {

Matrix simple_reflection_h(const RootDatum& rd, int i) {
  // s_i(h) = h - <alpha_i, h> coroot_i
  Matrix m = Matrix::identity(rd.rank);
  for (int k = 0; k < rd.rank; ++k) m(i, k) -= rd.cartan[k][i];
  return m;
}

Matrix simple_reflection_weight(const RootDatum& rd, int i) {
  // s_i(l) = l - <l, coroot_i> alpha_i
  Matrix m = Matrix::identity(rd.rank);
  for (int j = 0; j < rd.rank; ++j) m(j, i) -= rd.cartan[j][i];
  return m;
}

WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w{word, Matrix::identity(rd.rank), Matrix::identity(rd.rank)};
  for (int i : word) {
    w.on_h = w.on_h * simple_reflection_h(rd, i);
    w.on_weights = w.on_weights * simple_reflection_weight(rd, i);
  }
  return w;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, long long limit) {
  if (rd.weyl_order > limit)
    throw PreconditionError("Weyl group of order " + std::to_string(rd.weyl_order) + " is too large to enumerate");
  const int r = rd.rank;
  std::vector<Matrix> sh, sw;
  for (int i = 0; i < r; ++i) {
    sh.push_back(simple_reflection_h(rd, i));
    sw.push_back(simple_reflection_weight(rd, i));
  }
  Vec rho(r, Rational(1));
  std::vector<WeylElement> out{{{}, Matrix::identity(r), Matrix::identity(r)}};
  std::set<Vec> seen{rho};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < r; ++i) {
      Matrix mw = sw[i] * out[k].on_weights;
      Vec key = mw.apply(rho);
      if (!seen.insert(key).second) continue;
      std::vector<int> word{i};
      word.insert(word.end(), out[k].word.begin(), out[k].word.end());
      out.push_back({word, sh[i] * out[k].on_h, mw});
    }
  return out;
}

int inversion_count(const RootDatum& rd, const WeylElement& w) {
  // Act on roots in simple-root coordinates through the weight action:
  // fundamental coordinates of a root are cartan * coeffs.
  int count = 0;
  for (const auto& beta : rd.positive_roots) {
    Vec fund = zero_vec(rd.rank);
    for (int j = 0; j < rd.rank; ++j)
      for (int i = 0; i < rd.rank; ++i) fund[j] += rd.cartan[j][i] * beta[i];
    Vec img = w.apply_weight(fund);
    // Back to root coordinates: solve cartan * x = img.
    Matrix a(rd.rank, rd.rank);
    for (int i = 0; i < rd.rank; ++i)
      for (int j = 0; j < rd.rank; ++j) a(i, j) = rd.cartan[i][j];
    Vec x = *solve_unique(a, img);
    bool negative = false;
    for (const auto& c : x)
      if (c < 0) negative = true;
    count += negative;
  }
  return count;
}

std::vector<Vec> weyl_orbit(const RootDatum& rd, const Vec& lambda) {
  std::vector<Matrix> s;
  for (int i = 0; i < rd.rank; ++i) s.push_back(simple_reflection_weight(rd, i));
  std::set<Vec> seen{lambda};
  std::vector<Vec> queue{lambda};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& m : s) {
      Vec v = m.apply(queue[k]);
      if (seen.insert(v).second) queue.push_back(v);
    }
  return {seen.begin(), seen.end()};
}

Rational root_pairing(const RootDatum& rd, int k, const Vec& coweight) {
  Rational s = 0;
  for (int j = 0; j < rd.rank; ++j) s += rd.positive_roots[k][j] * coweight[j];
  return s;
}

bool is_dominant(const RootDatum& rd, const Vec& coweight) {
  for (int k = 0; k < rd.num_positive(); ++k) {
    Rational p = root_pairing(rd, k, coweight);
    if (p.get_den() == 1 && p < 0) return false;
  }
  return true;
}

bool is_antidominant(const RootDatum& rd, const Vec& coweight) {
  for (int k = 0; k < rd.num_positive(); ++k) {
    Rational p = root_pairing(rd, k, coweight);
    if (p.get_den() == 1 && p > 0) return false;
  }
  return true;
}

namespace {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rational>;

void monomials_of_degree(int vars, int deg, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = e;
    monomials_of_degree(vars, deg - e, cur, pos + 1, out);
  }
}

std::vector<Monomial> monomials(int vars, int deg) {
  std::vector<Monomial> out;
  Monomial cur(vars, 0);
  monomials_of_degree(vars, deg, cur, 0, out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly c;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      c[m] += ca * cb;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

// Substitute x_k -> sum_l m(l, k) x_l, i.e. f -> f o w^T on coordinates;
// averaging over the whole group makes the transpose immaterial.
Poly substitute(const Poly& f, const Matrix& m) {
  int n = m.rows();
  std::vector<Poly> lin(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (m(l, k) != 0) {
        Monomial e(n, 0);
        e[l] = 1;
        lin[k][e] = m(l, k);
      }
  Poly out;
  for (const auto& [mono, c] : f) {
    Poly term{{Monomial(n, 0), c}};
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < mono[k]; ++p) term = mul(term, lin[k]);
    for (const auto& [mm, cc] : term) out[mm] += cc;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

long long coinvariant_dim(const RootDatum& rd) {
  const int n = rd.rank;
  const int top = rd.num_positive();
  auto W = enumerate_weyl(rd);
  // Polynomial functions on h in coroot coordinates; w acts through on_h.
  std::vector<std::vector<Poly>> invariants(top + 2);
  for (int j = 1; j <= top + 1; ++j) {
    auto monos = monomials(n, j);
    std::map<Monomial, int> pos;
    for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = int(i);
    std::vector<Vec> rows;
    for (const auto& mono : monos) {
      Poly avg;
      Poly f{{mono, Rational(1)}};
      for (const auto& w : W)
        for (const auto& [mm, cc] : substitute(f, w.on_h)) avg[mm] += cc;
      Vec v = zero_vec(monos.size());
      for (const auto& [mm, cc] : avg) v[pos[mm]] = cc;
      rows.push_back(v);
    }
    Matrix m(int(rows.size()), int(monos.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < monos.size(); ++k) m(int(i), int(k)) = rows[i][k];
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      Poly p;
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (r(int(i), int(k)) != 0) p[monos[k]] = r(int(i), int(k));
      invariants[j].push_back(p);
    }
  }
  long long total = 0;
  for (int k = 0; k <= top + 1; ++k) {
    auto monos = monomials(n, k);
    std::map<Monomial, int> pos;
    for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = int(i);
    std::vector<Vec> gens;
    for (int j = 1; j <= k; ++j)
      for (const auto& inv : invariants[j])
        for (const auto& m : monomials(n, k - j)) {
          Poly p = mul(inv, Poly{{m, Rational(1)}});
          Vec v = zero_vec(monos.size());
          for (const auto& [mm, cc] : p) v[pos[mm]] = cc;
          gens.push_back(v);
        }
    int rk = 0;
    if (!gens.empty()) {
      Matrix g(int(gens.size()), int(monos.size()));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t c = 0; c < monos.size(); ++c) g(int(i), int(c)) = gens[i][c];
      rk = rank(g);
    }
    long long piece = (long long)monos.size() - rk;
    if (k == top + 1 && piece != 0) throw Error("coinvariant algebra does not vanish above degree |positive roots|");
    total += piece;
  }
  return total;
}

}  // namespace operforge
