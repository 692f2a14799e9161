#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::pair<char, int>> kSmallTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2},
                                                       {'B', 3}, {'C', 3}, {'D', 4}};

bool jacobi_holds(const ChevalleyAlgebra& g, int a, int b, int c) {
  int D = g.dim();
  Vec x = basis_vector(D, a), y = basis_vector(D, b), z = basis_vector(D, c);
  Vec s = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
  return is_zero(s);
}

}  // namespace

TEST_CASE("small types have the expected dimensions, exponents and Weyl orders") {
  struct Row {
    char f;
    int r, dim;
    std::vector<int> exps;
    long long w;
  };
  for (const auto& row : std::vector<Row>{{'A', 1, 3, {1}, 2},
                                          {'A', 2, 8, {1, 2}, 6},
                                          {'B', 2, 10, {1, 3}, 8},
                                          {'G', 2, 14, {1, 5}, 12},
                                          {'A', 3, 15, {1, 2, 3}, 24},
                                          {'D', 4, 28, {1, 3, 3, 5}, 192},
                                          {'F', 4, 52, {1, 5, 7, 11}, 1152},
                                          {'E', 6, 78, {1, 4, 5, 7, 8, 11}, 51840}}) {
    auto alg = build_algebra(row.f, row.r);
    CHECK(alg->dim() == row.dim);
    CHECK(alg->root.exponents == row.exps);
    CHECK(alg->root.weyl_order == row.w);
  }
}

TEST_CASE("invalid family/rank pairs are rejected") {
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'C', 2}, {'D', 3}, {'E', 5}, {'E', 9},
                                                       {'F', 3}, {'G', 3}, {'X', 2}})
    CHECK_THROWS_AS(make_root_datum(f, r), PreconditionError);
}

TEST_CASE("root datum invariants") {
  for (auto [f, r] : kSmallTypes) {
    auto rd = make_root_datum(f, r);
    INFO(f << r);
    for (int i = 0; i < r; ++i) {
      CHECK(rd.cartan[i][i] == 2);
      for (int j = 0; j < r; ++j)
        if (i != j) CHECK(rd.cartan[i][j] <= 0);
    }
    auto alg = build_algebra(f, r);
    CHECK(rd.num_positive() == (alg->dim() - r) / 2);
    int sum = 0;
    for (int d : rd.exponents) sum += d;
    CHECK(sum == rd.num_positive());
    if (rd.weyl_order <= 2000) CHECK((long long)enumerate_weyl(rd).size() == rd.weyl_order);
  }
}

TEST_CASE("Jacobi identity on every basis triple for rank <= 2, sampled above") {
  for (auto [f, r] : kSmallTypes) {
    const auto& g = build_algebra(f, r)->lie;
    INFO(f << r);
    int D = g.dim(), failures = 0;
    if (r <= 2) {
      for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b)
          for (int c = b + 1; c < D; ++c) failures += !jacobi_holds(g, a, b, c);
    } else {
      Rng rng(17 + r);
      for (int k = 0; k < 400; ++k) failures += !jacobi_holds(g, rng.uniform(0, D - 1), rng.uniform(0, D - 1), rng.uniform(0, D - 1));
    }
    CHECK(failures == 0);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        Vec x = basis_vector(D, a), y = basis_vector(D, b);
        CHECK(g.bracket(x, y) == scaled(g.bracket(y, x), -1));
      }
  }
}

TEST_CASE("Chevalley relations and principal grading") {
  for (auto [f, r] : kSmallTypes) {
    auto alg = build_algebra(f, r);
    const auto& g = alg->lie;
    const auto& rd = alg->root;
    int D = g.dim();
    for (int i = 0; i < r; ++i)
      CHECK(g.bracket(basis_vector(D, g.e(i)), basis_vector(D, g.f(i))) == basis_vector(D, g.h(i)));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < g.npos(); ++k) {
        Vec he = g.bracket(basis_vector(D, g.h(i)), basis_vector(D, g.e(k)));
        CHECK(he == scaled(basis_vector(D, g.e(k)), rd.pairing(rd.positive_roots[k], i)));
      }
    for (int k = 0; k < g.npos(); ++k) {
      CHECK(g.degree(g.e(k)) == rd.height[k]);
      CHECK(g.degree(g.f(k)) == -rd.height[k]);
    }
    for (int i = 0; i < r; ++i) CHECK(g.degree(g.h(i)) == 0);
    // structure constants are integers
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b)
        for (const auto& t : g.bracket_basis(a, b)) CHECK(t.coeff.get_den() == 1);
  }
}

TEST_CASE("principal sl2 triple, Kostant slice and degree decomposition") {
  for (auto [f, r] : kSmallTypes) {
    auto alg = build_algebra(f, r);
    const auto& g = alg->lie;
    const auto& pd = alg->principal;
    INFO(f << r);
    CHECK(g.bracket(pd.two_rho_check, pd.p_minus1) == scaled(pd.p_minus1, -2));
    CHECK(g.bracket(pd.two_rho_check, pd.p1) == scaled(pd.p1, 2));
    CHECK(g.bracket(pd.p1, pd.p_minus1) == pd.two_rho_check);
    for (const auto& b : pd.vcan)
      for (const auto& v : b.basis) CHECK(is_zero(g.bracket(pd.p1, v)));
    for (int d = 0; d <= g.max_degree(); ++d) {
      const auto& bd = g.degree_indices(d);
      std::vector<Vec> image;
      if (d + 1 <= g.max_degree())
        for (int a : g.degree_indices(d + 1)) image.push_back(g.bracket(pd.p_minus1, basis_vector(g.dim(), a)));
      int block = alg->vcan_block_of_degree(d);
      std::vector<Vec> all = image;
      if (block >= 0) all.insert(all.end(), pd.vcan[block].basis.begin(), pd.vcan[block].basis.end());
      int vdim = block >= 0 ? int(pd.vcan[block].basis.size()) : 0;
      int img = image.empty() ? 0 : rank(Matrix::from_columns(image, g.dim()));
      CHECK(img + vdim == int(bd.size()));
      CHECK((all.empty() ? 0 : rank(Matrix::from_columns(all, g.dim()))) == int(bd.size()));
    }
  }
}

TEST_CASE("type A realization is a Lie algebra homomorphism") {
  for (int r = 1; r <= 3; ++r) {
    auto alg = build_algebra('A', r);
    auto rep = type_a_realization(*alg);
    int D = alg->dim();
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        Matrix x = rep[a], y = rep[b];
        CHECK(x * y - y * x == realize(rep, alg->lie.bracket(basis_vector(D, a), basis_vector(D, b))));
      }
  }
}

TEST_CASE("dual root datum has the transposed Cartan matrix") {
  for (auto [f, r] : kSmallTypes) {
    auto rd = make_root_datum(f, r);
    auto du = make_dual_root_datum(rd);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(du.cartan[i][j] == rd.cartan[j][i]);
    CHECK(du.weyl_order == rd.weyl_order);
  }
}

TEST_CASE("kostant_project on sl2") {
  auto alg = build_algebra('A', 1);
  const auto& g = alg->lie;
  CHECK(kostant_project(*alg, zero_vec(3)).coords == Vec{0});
  for (Rational a : {Rational(1), Rational(-2), Rational(3, 5)}) {
    Vec x = scaled(basis_vector(3, g.h(0)), a);
    // char. poly of f + a h is x^2 - a^2, that of f + c e is x^2 - c
    CHECK(kostant_project(*alg, x).coords == Vec{a * a});
    CHECK(kostant_project(*alg, scaled(x, -1)) == kostant_project(*alg, x));
    std::vector<Vec> witness;
    kostant_project(*alg, x, &witness);
    REQUIRE(witness.size() == 2);  // one entry per principal degree
    CHECK(witness[0] == scaled(basis_vector(3, g.e(0)), -a));
    CHECK(is_zero(witness[1]));
  }
}

TEST_CASE("kostant_project is W-invariant on h") {
  Rng rng(5);
  for (auto [f, r] : kSmallTypes) {
    auto alg = build_algebra(f, r);
    auto W = enumerate_weyl(alg->root);
    for (int trial = 0; trial < 3; ++trial) {
      Vec hc(r);
      for (auto& c : hc) c = rng.rational();
      auto base = kostant_project(*alg, alg->embed_h(hc));
      if (r <= 2) {
        for (const auto& w : W) CHECK(kostant_project(*alg, alg->embed_h(w.apply_h(hc))) == base);
      } else {
        for (int s = 0; s < 6; ++s) {
          const auto& w = W[rng.uniform(0, int(W.size()) - 1)];
          CHECK(kostant_project(*alg, alg->embed_h(w.apply_h(hc))) == base);
        }
      }
    }
  }
}

TEST_CASE("in type A the slice coordinates match characteristic polynomials") {
  Rng rng(11);
  for (int r = 1; r <= 3; ++r) {
    auto alg = build_algebra('A', r);
    auto rep = type_a_realization(*alg);
    const auto& g = alg->lie;
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = zero_vec(g.dim());
      for (int a = 0; a < g.dim(); ++a)
        if (!g.is_f(a) && rng.coin()) x[a] = rng.rational();
      auto p = kostant_project(*alg, x);
      Vec on_slice = alg->principal.p_minus1 + alg->vcan_vector(p);
      CHECK(charpoly(realize(rep, alg->principal.p_minus1 + x)) == charpoly(realize(rep, on_slice)));
      // and distinct slice points give distinct characteristic polynomials
      CartanOrbitPoint q = p;
      q.coords[0] += 1;
      CHECK(charpoly(realize(rep, alg->principal.p_minus1 + alg->vcan_vector(q))) != charpoly(realize(rep, on_slice)));
    }
  }
}

TEST_CASE("Weyl group: words, lengths, orbits and dominance") {
  for (auto [f, r] : kSmallTypes) {
    auto rd = make_root_datum(f, r);
    if (rd.weyl_order > 2000) continue;
    for (const auto& w : enumerate_weyl(rd)) {
      CHECK(inversion_count(rd, w) == w.length());
      auto w2 = weyl_from_word(rd, w.word);
      CHECK(w2.on_h == w.on_h);
      CHECK(w2.on_weights == w.on_weights);
    }
  }
  auto a2 = make_root_datum('A', 2);
  CHECK(weyl_orbit(a2, Vec{1, 1}).size() == 6);
  CHECK(weyl_orbit(a2, Vec{1, 0}).size() == 3);
  auto a1 = make_root_datum('A', 1);
  CHECK(is_dominant(a1, Vec{2}));
  CHECK_FALSE(is_antidominant(a1, Vec{2}));
  CHECK(is_dominant(a1, Vec{Rational(1, 2)}));
  CHECK(is_antidominant(a1, Vec{Rational(1, 2)}));
  CHECK_FALSE(is_dominant(a1, Vec{-1}));
  CHECK(is_antidominant(a1, Vec{-1}));
}

TEST_CASE("coinvariant algebra has dimension |W|") {
  CHECK(coinvariant_dim(make_root_datum('A', 1)) == 2);
  CHECK(coinvariant_dim(make_root_datum('A', 2)) == 6);
  CHECK(coinvariant_dim(make_root_datum('B', 2)) == 8);
  CHECK(coinvariant_dim(make_root_datum('G', 2)) == 12);
}
