#include "operforge/rootdata.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "operforge/errors.hpp"

namespace operforge {

namespace {

std::string type_name(char family, int rank) { return std::string(1, family) + std::to_string(rank); }

bool valid_type(char family, int n) {
  if (n < 1 || n > 8) return false;
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

Matrix gram_matrix(char family, int n) {
  Matrix g(n, n);
  auto link = [&](int i, int j, const Rational& v) {
    g(i, j) = v;
    g(j, i) = v;
  };
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      g(n - 1, n - 1) = 1;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) {
        g(i, i) = 1;
        link(i, i + 1, i + 2 < n ? Rational(-1, 2) : Rational(-1));
      }
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      // Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 attached to 4.
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      g(2, 2) = 1;
      g(3, 3) = 1;
      break;
    case 'G':
      g(0, 0) = Rational(2, 3);
      link(0, 1, -1);
      break;
  }
  return g;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b, int s = 1) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + s * b[i];
  return c;
}

int as_int(const Rational& r) {
  if (r.get_den() != 1) throw Error("non-integral structure constant");
  return int(r.get_num().get_si());
}

}  // namespace

int RootDatum::find_root(const std::vector<int>& coeffs) const {
  auto it = index.find(coeffs);
  return it == index.end() ? -1 : it->second;
}

Rational RootDatum::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (a[i] != 0 && b[j] != 0) s += a[i] * b[j] * gram(i, j);
  return s;
}

int RootDatum::pairing(const std::vector<int>& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
  return s;
}

Vec RootDatum::coroot(int k) const {
  const auto& b = positive_roots[k];
  Rational len = inner(b, b);
  Vec c(rank);
  for (int j = 0; j < rank; ++j) c[j] = b[j] * gram(j, j) / len;
  return c;
}

namespace {

RootDatum root_datum_from_gram(char family, int rank, Matrix gram) {
  RootDatum rd;
  rd.family = family;
  rd.rank = rank;
  rd.gram = std::move(gram);
  rd.cartan.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rd.cartan[i][j] = as_int(2 * rd.gram(i, j) / rd.gram(i, i));

  // Root strings: beta + alpha_i is a root iff q - <beta, coroot_i> > 0.
  std::vector<std::vector<int>>& roots = rd.positive_roots;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> a(rank, 0);
    a[i] = 1;
    rd.index[a] = int(roots.size());
    roots.push_back(a);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < rank; ++i) {
      std::vector<int> beta = roots[k];
      int q = 0;
      std::vector<int> down = beta;
      for (;;) {
        down[i] -= 1;
        if (!rd.index.count(down)) break;
        ++q;
      }
      int p = q - rd.pairing(beta, i);
      if (p <= 0) continue;
      beta[i] += 1;
      if (!rd.index.count(beta)) {
        rd.index[beta] = int(roots.size());
        roots.push_back(beta);
      }
    }
  }
  auto ht = [](const std::vector<int>& r) {
    int s = 0;
    for (int x : r) s += x;
    return s;
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rd.index.clear();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    rd.index[roots[k]] = int(k);
    rd.height.push_back(ht(roots[k]));
  }

  // Exponents from the height partition: #{i : d_i >= k} = #{roots of height k}.
  int top = rd.height.back();
  std::vector<int> count(top + 2, 0);
  for (int h : rd.height) ++count[h];
  for (int k = 1; k <= top; ++k)
    for (int m = 0; m < count[k] - count[k + 1]; ++m) rd.exponents.push_back(k);
  rd.coxeter_number = top + 1;
  rd.weyl_order = 1;
  for (int d : rd.exponents) rd.weyl_order *= d + 1;
  return rd;
}

}  // namespace

RootDatum make_root_datum(char family, int rank) {
  if (!valid_type(family, rank))
    throw PreconditionError("unsupported Cartan type " + type_name(family, rank));
  return root_datum_from_gram(family, rank, gram_matrix(family, rank));
}

RootDatum make_dual_root_datum(const RootDatum& rd) {
  // Coroots as roots: (a^, b^) = 4(a,b)/((a,a)(b,b)), rescaled so the long
  // ones have length 2.
  const int n = rd.rank;
  Matrix g(n, n);
  Rational longest = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g(i, j) = 4 * rd.gram(i, j) / (rd.gram(i, i) * rd.gram(j, j));
      if (i == j && g(i, i) > longest) longest = g(i, i);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = 2 * g(i, j) / longest;
  char family = rd.family == 'B' ? 'C' : rd.family == 'C' ? 'B' : rd.family;
  return root_datum_from_gram(family, n, std::move(g));
}

ChevalleyAlgebra::ChevalleyAlgebra(const RootDatum& rd)
    : rank_(rd.rank), npos_(rd.num_positive()), roots_(rd.positive_roots), index_(rd.index) {
  const int P = npos_;
  max_degree_ = rd.height.back();
  npos_table_.assign(std::size_t(P) * P, 0);
  extraspecial_.assign(P, {-1, -1});
  for (int k = 0; k < P; ++k) lengths_.push_back(rd.inner(roots_[k], roots_[k]));

  // Extraspecial pairs get N = +(p+1); the remaining positive pairs follow
  // from the four-term relation applied to (r, s, -a, -b).
  for (int xi = 0; xi < P; ++xi) {
    if (rd.height[xi] == 1) continue;
    int a = -1, b = -1;
    for (int r = 0; r < P && a < 0; ++r) {
      int s = rd.find_root(add(roots_[xi], roots_[r], -1));
      if (s >= 0) {
        a = r;
        b = s;
      }
    }
    int p = 0;
    for (std::vector<int> v = add(roots_[b], roots_[a], -1); rd.find_root(v) >= 0; v = add(v, roots_[a], -1)) ++p;
    extraspecial_[xi] = {a, b};
    npos_table_[std::size_t(a) * P + b] = p + 1;
    npos_table_[std::size_t(b) * P + a] = -(p + 1);
    for (int r = 0; r < P; ++r) {
      int s = rd.find_root(add(roots_[xi], roots_[r], -1));
      if (s < 0 || r >= s || r == a) continue;
      Rational sum = 0;
      std::vector<int> v = add(roots_[s], roots_[a], -1);
      if (signed_root(v) != 0)
        sum += Rational(structure_constant(s + 1, -(a + 1)) * structure_constant(r + 1, -(b + 1))) / rd.inner(v, v);
      v = add(roots_[r], roots_[a], -1);
      if (signed_root(v) != 0)
        sum += Rational(structure_constant(-(a + 1), r + 1) * structure_constant(s + 1, -(b + 1))) / rd.inner(v, v);
      int n = as_int(lengths_[xi] * sum / (p + 1));
      npos_table_[std::size_t(r) * P + s] = n;
      npos_table_[std::size_t(s) * P + r] = -n;
    }
  }

  int D = dim();
  labels_.resize(D);
  degree_.resize(D);
  auto coeff_label = [&](int k) {
    std::string s = "[";
    for (int i = 0; i < rank_; ++i) s += (i ? "," : "") + std::to_string(roots_[k][i]);
    return s + "]";
  };
  for (int k = 0; k < P; ++k) {
    labels_[e(k)] = "e" + coeff_label(k);
    labels_[f(k)] = "f" + coeff_label(k);
    degree_[e(k)] = rd.height[k];
    degree_[f(k)] = -rd.height[k];
  }
  for (int i = 0; i < rank_; ++i) {
    labels_[h(i)] = "h" + std::to_string(i + 1);
    degree_[h(i)] = 0;
  }
  by_degree_.assign(2 * max_degree_ + 1, {});
  for (int a = 0; a < D; ++a) by_degree_[degree_[a] + max_degree_].push_back(a);

  std::vector<Vec> coroots(P);
  for (int k = 0; k < P; ++k) coroots[k] = rd.coroot(k);
  auto basis_of_root = [&](int r) { return r > 0 ? e(r - 1) : f(-r - 1); };
  auto root_of = [&](int a) { return is_e(a) ? a + 1 : is_f(a) ? -(a - npos_ - rank_ + 1) : 0; };
  table_.assign(std::size_t(D) * D, {});
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      auto& out = table_[std::size_t(a) * D + b];
      int ra = root_of(a), rb = root_of(b);
      if (ra == 0 && rb == 0) continue;
      if (ra == 0 || rb == 0) {
        int i = ra == 0 ? a - npos_ : b - npos_;
        int r = ra == 0 ? rb : ra;
        int c = rd.pairing(roots_[std::abs(r) - 1], i) * (r > 0 ? 1 : -1);
        if (ra != 0) c = -c;
        if (c != 0) out.push_back({ra == 0 ? b : a, Rational(c)});
        continue;
      }
      if (ra == -rb) {
        const Vec& cr = coroots[std::abs(ra) - 1];
        for (int j = 0; j < rank_; ++j)
          if (cr[j] != 0) out.push_back({h(j), ra > 0 ? cr[j] : Rational(-cr[j])});
        continue;
      }
      int n = structure_constant(ra, rb);
      if (n != 0) out.push_back({basis_of_root(signed_root(add(coeffs_of(ra), coeffs_of(rb)))), Rational(n)});
    }
}

std::vector<int> ChevalleyAlgebra::coeffs_of(int r) const {
  std::vector<int> c = roots_[std::abs(r) - 1];
  if (r < 0)
    for (int& x : c) x = -x;
  return c;
}

int ChevalleyAlgebra::signed_root(const std::vector<int>& c) const {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second + 1;
  std::vector<int> m = c;
  for (int& x : m) x = -x;
  it = index_.find(m);
  if (it != index_.end()) return -(it->second + 1);
  return 0;
}

int ChevalleyAlgebra::structure_constant(int r, int s) const {
  if (r == -s || signed_root(add(coeffs_of(r), coeffs_of(s))) == 0) return 0;
  const int P = npos_;
  if (r > 0 && s > 0) return npos_table_[std::size_t(r - 1) * P + (s - 1)];
  if (r < 0 && s < 0) return -structure_constant(-r, -s);
  if (r < 0) return -structure_constant(s, r);
  // r > 0 > s: reduce through the triple relation for roots summing to 0.
  //   x - y = z > 0:  N_{x,-y} = -(z,z)/(x,x) N_{y,z}
  //   y - x = z > 0:  N_{x,-y} =  (z,z)/(y,y) N_{z,x}
  int x = r - 1, y = -s - 1;
  int t = signed_root(add(roots_[x], roots_[y], -1));
  if (t > 0) {
    int z = t - 1;
    return as_int(-lengths_[z] / lengths_[x] * npos_table_[std::size_t(y) * P + z]);
  }
  int z = -t - 1;
  return as_int(lengths_[z] / lengths_[y] * npos_table_[std::size_t(z) * P + x]);
}

Vec ChevalleyAlgebra::bracket(const Vec& x, const Vec& y) const {
  int D = dim();
  Vec out = zero_vec(D);
  for (int a = 0; a < D; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < D; ++b) {
      if (y[b] == 0) continue;
      const auto& t = bracket_basis(a, b);
      if (t.empty()) continue;
      Rational c = x[a] * y[b];
      for (const auto& term : t) out[term.index] += c * term.coeff;
    }
  }
  return out;
}

Matrix ChevalleyAlgebra::ad(const Vec& x) const {
  int D = dim();
  Matrix m(D, D);
  for (int a = 0; a < D; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < D; ++b)
      for (const auto& term : bracket_basis(a, b)) m(term.index, b) += x[a] * term.coeff;
  }
  return m;
}

}  // namespace operforge

namespace operforge {

namespace {

Vec restrict_to(const Vec& x, const std::vector<int>& idx) {
  Vec r(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r[k] = x[idx[k]];
  return r;
}

PrincipalData make_principal(const RootDatum& rd, const ChevalleyAlgebra& g, const Matrix& cinv) {
  const int D = g.dim(), r = rd.rank;
  PrincipalData pd;
  pd.p_minus1 = zero_vec(D);
  for (int i = 0; i < r; ++i) pd.p_minus1[g.f(i)] = 1;
  for (int j = 0; j < r; ++j) pd.fundamental_coweights.push_back(cinv.row(j));
  pd.rho_check = zero_vec(D);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) pd.rho_check[g.h(k)] += cinv(j, k);
  pd.two_rho_check = scaled(pd.rho_check, 2);

  // p_1 in n_1 with [p_1, p_{-1}] = 2 rho-check; the solution must be unique.
  const auto& n1 = g.degree_indices(1);
  std::vector<int> hidx;
  for (int i = 0; i < r; ++i) hidx.push_back(g.h(i));
  Matrix m(r, int(n1.size()));
  for (std::size_t c = 0; c < n1.size(); ++c) {
    Vec ei = zero_vec(D);
    ei[n1[c]] = 1;
    Vec col = restrict_to(g.bracket(ei, pd.p_minus1), hidx);
    for (int i = 0; i < r; ++i) m(i, int(c)) = col[i];
  }
  auto sol = solve_unique(m, restrict_to(pd.two_rho_check, hidx));
  if (!sol) throw Error("principal triple: p_1 is not uniquely determined");
  pd.p1 = zero_vec(D);
  for (std::size_t c = 0; c < n1.size(); ++c) pd.p1[n1[c]] = (*sol)[c];

  // V_can,d = ker(ad p_1) on n_d. Degree 1 is spanned by p_1 itself.
  const int top = g.max_degree();
  std::vector<int> mult(top + 1, 0);
  for (int d : rd.exponents) ++mult[d];
  int offset = 0;
  for (int d = 1; d <= top; ++d) {
    const auto& src = g.degree_indices(d);
    std::vector<Vec> basis;
    if (d == 1) {
      basis.push_back(pd.p1);
    } else {
      std::vector<int> dst = d + 1 <= top ? g.degree_indices(d + 1) : std::vector<int>{};
      Matrix a(int(dst.size()), int(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c) {
        Vec x = zero_vec(D);
        x[src[c]] = 1;
        Vec col = restrict_to(g.bracket(pd.p1, x), dst);
        for (std::size_t i = 0; i < dst.size(); ++i) a(int(i), int(c)) = col[i];
      }
      for (const Vec& k : nullspace(a)) {
        Vec x = zero_vec(D);
        for (std::size_t c = 0; c < src.size(); ++c) x[src[c]] = k[c];
        basis.push_back(x);
      }
    }
    if (int(basis.size()) != mult[d]) throw Error("Kostant slice dimension disagrees with the exponents");
    if (basis.empty()) continue;
    pd.vcan.push_back({d, offset, basis});
    offset += int(basis.size());
  }
  pd.vcan_dim = offset;

  for (int d = 0; d <= top; ++d) {
    DegreeSolver s;
    s.degree = d;
    s.target = g.degree_indices(d);
    if (d + 1 <= top) s.source = g.degree_indices(d + 1);
    for (std::size_t b = 0; b < pd.vcan.size(); ++b)
      if (pd.vcan[b].degree == d) s.block = int(b);
    int n = int(s.target.size());
    int cols = int(s.source.size()) + (s.block >= 0 ? int(pd.vcan[s.block].basis.size()) : 0);
    if (cols != n) throw Error("b_d is not [p_{-1}, b_{d+1}] + V_can,d at degree " + std::to_string(d));
    Matrix m(n, n);
    int c = 0;
    for (int a : s.source) {
      Vec x = zero_vec(D);
      x[a] = 1;
      Vec col = restrict_to(g.bracket(x, pd.p_minus1), s.target);
      for (int i = 0; i < n; ++i) m(i, c) = col[i];
      ++c;
    }
    if (s.block >= 0)
      for (const Vec& v : pd.vcan[s.block].basis) {
        Vec col = restrict_to(v, s.target);
        for (int i = 0; i < n; ++i) m(i, c) = col[i];
        ++c;
      }
    auto inv = inverse(m);
    if (!inv) throw Error("b_d is not [p_{-1}, b_{d+1}] + V_can,d at degree " + std::to_string(d));
    s.inverse = *inv;
    pd.solvers.push_back(std::move(s));
  }
  return pd;
}

}  // namespace

std::pair<Vec, Vec> DegreeSolver::decompose(const Vec& c, int dim) const {
  Vec sol = inverse.apply(restrict_to(c, target));
  Vec u = zero_vec(dim);
  for (std::size_t k = 0; k < source.size(); ++k) u[source[k]] = sol[k];
  Vec v(sol.begin() + source.size(), sol.end());
  return {u, v};
}

Algebra::Algebra(RootDatum rd) : root(std::move(rd)), lie(root) {
  Matrix a(root.rank, root.rank);
  for (int i = 0; i < root.rank; ++i)
    for (int j = 0; j < root.rank; ++j) a(i, j) = root.cartan[i][j];
  cartan_inverse = *inverse(a);
  principal = make_principal(root, lie, cartan_inverse);
}

Vec Algebra::coweight_to_h(const Vec& fund) const {
  Vec c = zero_vec(rank());
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) c[k] += fund[j] * cartan_inverse(j, k);
  return c;
}

Vec Algebra::h_to_coweight(const Vec& hc) const {
  Vec l = zero_vec(rank());
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) l[i] += hc[k] * root.cartan[k][i];
  return l;
}

Vec Algebra::embed_h(const Vec& hc) const {
  Vec x = zero_vec(dim());
  for (int i = 0; i < rank(); ++i) x[lie.h(i)] = hc[i];
  return x;
}

Vec Algebra::h_part(const Vec& x) const {
  Vec c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = x[lie.h(i)];
  return c;
}

Vec Algebra::vcan_vector(const CartanOrbitPoint& p) const {
  Vec x = zero_vec(dim());
  for (const auto& b : principal.vcan)
    for (std::size_t k = 0; k < b.basis.size(); ++k) axpy(x, p.coords[b.offset + k], b.basis[k]);
  return x;
}

int Algebra::vcan_block_of_degree(int d) const {
  for (std::size_t b = 0; b < principal.vcan.size(); ++b)
    if (principal.vcan[b].degree == d) return int(b);
  return -1;
}

Vec Algebra::vcan_block_coords(int block, const Vec& x) const {
  const auto& b = principal.vcan[block];
  Matrix m = Matrix::from_columns(b.basis, dim());
  auto sol = solve_unique(m, x);
  if (!sol) throw Error("vector is not in V_can,d");
  return *sol;
}

namespace {

std::shared_ptr<const Algebra> cached_algebra(char family, int rank, bool dual) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, bool>, std::shared_ptr<const Algebra>> cache;
  auto key = std::make_tuple(family, rank, dual);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RootDatum rd = make_root_datum(family, rank);
  auto alg = std::make_shared<const Algebra>(dual ? make_dual_root_datum(rd) : std::move(rd));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, alg).first->second;
}

}  // namespace

std::shared_ptr<const Algebra> build_algebra(char family, int rank) { return cached_algebra(family, rank, false); }

std::shared_ptr<const Algebra> build_dual_algebra(char family, int rank) { return cached_algebra(family, rank, true); }

Vec ad_exp_apply(const ChevalleyAlgebra& g, const Vec& u, const Vec& y) {
  Vec out = y, term = y;
  for (int k = 1; k <= g.dim() + 1; ++k) {
    term = g.bracket(u, term);
    if (is_zero(term)) return out;
    term = scaled(term, Rational(1, k));
    out = out + term;
  }
  throw Error("ad_exp_apply: element is not ad-nilpotent");
}

CartanOrbitPoint kostant_project(const Algebra& alg, const Vec& x, std::vector<Vec>* witness) {
  const auto& g = alg.lie;
  for (int k = 0; k < g.npos(); ++k)
    if (x[g.f(k)] != 0) throw PreconditionError("kostant_project: argument is not in b");
  const auto& pd = alg.principal;
  Vec y = pd.p_minus1 + x;
  CartanOrbitPoint out{zero_vec(pd.vcan_dim)};
  for (const auto& s : pd.solvers) {
    auto [u, v] = s.decompose(y, g.dim());
    if (!is_zero(u)) {
      u = -u;
      y = ad_exp_apply(g, u, y);
    }
    if (witness) witness->push_back(u);
    if (s.block >= 0)
      for (std::size_t k = 0; k < v.size(); ++k) out.coords[pd.vcan[s.block].offset + k] = v[k];
  }
  return out;
}

std::vector<Matrix> type_a_realization(const Algebra& alg) {
  if (alg.root.family != 'A') throw PreconditionError("matrix realization is only available in type A");
  const auto& g = alg.lie;
  const int n = alg.rank() + 1;
  auto E = [&](int i, int j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  };
  std::vector<Matrix> rep(g.dim());
  for (int i = 0; i < alg.rank(); ++i) {
    rep[g.e(i)] = E(i, i + 1);
    rep[g.f(i)] = E(i + 1, i);
    rep[g.h(i)] = E(i, i) - E(i + 1, i + 1);
  }
  for (int k = alg.rank(); k < g.npos(); ++k) {
    auto [a, b] = g.extraspecial(k);
    Rational N = g.structure_constant(a + 1, b + 1);
    Matrix ce = rep[g.e(a)] * rep[g.e(b)] - rep[g.e(b)] * rep[g.e(a)];
    Matrix cf = rep[g.f(a)] * rep[g.f(b)] - rep[g.f(b)] * rep[g.f(a)];
    Rational Nf = g.structure_constant(-(a + 1), -(b + 1));
    rep[g.e(k)] = Matrix(n, n);
    rep[g.f(k)] = Matrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rep[g.e(k)](i, j) = ce(i, j) / N;
        rep[g.f(k)](i, j) = cf(i, j) / Nf;
      }
  }
  return rep;
}

Matrix realize(const std::vector<Matrix>& rep, const Vec& x) {
  int n = rep[0].rows();
  Matrix m(n, n);
  for (std::size_t a = 0; a < rep.size(); ++a) {
    if (x[a] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rep[a](i, j) != 0) m(i, j) += x[a] * rep[a](i, j);
  }
  return m;
}

}  // namespace operforge
