#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace testing;

namespace {

bool contains(const std::vector<AffineWeight>& set, const AffineWeight& w) {
  return std::binary_search(set.begin(), set.end(), w);
}

Vec rho_weight(int r) { return Vec(r, Rational(1)); }

}  // namespace

TEST_CASE("anti-dominance") {
  auto rd = make_root_datum('A', 1);
  for (int k = 0; k <= 4; ++k) CHECK(is_antidominant_weight(rd, Vec{-k}));
  CHECK_FALSE(is_antidominant_weight(rd, Vec{1}));
  CHECK(is_antidominant_weight(rd, Vec{Rational(1, 2)}));
  auto a2 = make_root_datum('A', 2);
  CHECK(is_antidominant_weight(a2, Vec{-1, -1}));
  CHECK_FALSE(is_antidominant_weight(a2, Vec{-1, 2}));  // alpha_1 + alpha_2 pairs to 1
  CHECK_FALSE(is_antidominant_weight(a2, Vec{1, -1}));
  CHECK(is_antidominant_weight(a2, Vec{Rational(1, 2), Rational(-1, 3)}));
  auto b2 = make_root_datum('B', 2);
  CHECK(is_antidominant_weight(b2, Vec{0, 0}));
  CHECK_FALSE(is_antidominant_weight(b2, Vec{2, -1}));
}

TEST_CASE("Kac-Kazhdan steps on sl2") {
  auto rd = make_root_datum('A', 1);
  // start -rho: mu + rho = 0 pairs to zero with every real root
  for (const auto& w : kk_chain_search(rd, {0, Vec{-1}}, 3)) CHECK(w.finite == Vec{-1});
  auto from0 = kk_chain_search(rd, {0, Vec{0}}, 2);
  CHECK(contains(from0, {0, Vec{-2}}));
  CHECK(contains(from0, {1, Vec{0}}));
  CHECK(contains(from0, {0, Vec{0}}));
  // the reflection step through alpha + delta costs one unit of delta-degree
  CHECK(contains(from0, {1, Vec{-2}}));
  for (const auto& s : kk_steps(rd, {0, Vec{3}}, 4)) CHECK((s.n > 0 || s.finite == Vec{-5}));
  CHECK_THROWS_AS(kk_chain_search(rd, {0, Vec{0}}, 7), PreconditionError);
}

TEST_CASE("chain search is closed under one more step") {
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    auto rd = make_root_datum(f, r);
    Vec lam = zero_vec(r);
    lam[0] = 1;
    const int depth = 2;
    auto set = kk_chain_search(rd, {0, lam}, depth);
    for (const auto& w : set)
      for (const auto& s : kk_steps(rd, w, depth)) CHECK(contains(set, s));
    auto smaller = kk_chain_search(rd, {0, lam}, depth - 1);
    for (const auto& w : smaller) CHECK(contains(set, w));
  }
}

TEST_CASE("Verma irreducibility at the critical level") {
  auto a1 = make_root_datum('A', 1);
  CHECK(verma_irreducible_critical(a1, Vec{-1}));
  CHECK_FALSE(verma_irreducible_critical(a1, Vec{0}));
  CHECK(chain_finds_submodule(a1, Vec{0}));
  auto a2 = make_root_datum('A', 2);
  CHECK(verma_irreducible_critical(a2, Vec{-1, -1}));
  Vec rho = rho_weight(2);
  for (const auto& w : enumerate_weyl(a2)) {
    if (w.length() == 0) continue;
    // lambda + rho = w(rho) is regular, so lambda + rho is never anti-dominant unless w = w_0
    Vec lam = w.apply_weight(rho) - rho;
    bool anti = w.length() == 3;
    CHECK(verma_irreducible_critical(a2, lam) == anti);
    CHECK(chain_finds_submodule(a2, lam) == !anti);
  }
}

TEST_CASE("irreducibility agrees with chain search on small grids") {
  auto a1 = make_root_datum('A', 1);
  for (int k = -5; k <= 5; ++k)
    CHECK(verma_irreducible_critical(a1, Vec{k}) == !chain_finds_submodule(a1, Vec{k}));
  for (Rational x : {Rational(1, 2), Rational(-7, 3), Rational(5, 4)})
    CHECK(verma_irreducible_critical(a1, Vec{x}) == !chain_finds_submodule(a1, Vec{x}));
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto rd = make_root_datum(f, r);
    for (int a = -3; a <= 2; ++a)
      for (int b = -3; b <= 2; ++b)
        CHECK(verma_irreducible_critical(rd, Vec{a, b}) == !chain_finds_submodule(rd, Vec{a, b}, 3));
  }
}

TEST_CASE("central characters") {
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    auto dual = build_dual_algebra(f, r);
    auto rd = make_root_datum(f, r);
    Vec rho = rho_weight(r);
    CHECK(central_character(f, r, scaled(rho, -1)) == kostant_project(*dual, zero_vec(dual->dim())));
    CHECK(central_character(f, r, zero_vec(r)) == nilpotent_point(*dual));
    Rng rng(std::uint64_t(r) * 31 + f);
    Vec lam(r);
    for (auto& x : lam) x = rng.rational();
    auto base = central_character(f, r, lam);
    for (const auto& w : enumerate_weyl(rd)) {
      CHECK(central_character(f, r, w.apply_weight(rho) - rho) == nilpotent_point(*dual));
      CHECK(central_character(f, r, w.apply_weight(lam + rho) - rho) == base);
    }
  }
  // sl2: kostant_project(-(lambda + 1) omega) has coordinate ((lambda + 1)/2)^2
  for (Rational l : {Rational(0), Rational(3), Rational(-1, 2)})
    CHECK(central_character('A', 1, Vec{l}).coords == Vec{(l + 1) * (l + 1) / 4});
}

TEST_CASE("Verma characters") {
  auto a1 = make_root_datum('A', 1);
  auto loop = verma_character(a1, Vec{0}, 1, 1, true);
  CHECK(loop.total_at_degree(1) == 3);
  CHECK(loop.total_at_degree(0) == 1);
  auto t = verma_character(a1, Vec{0}, 3, 6, true);
  CHECK(t.total_at_degree(2) == 9);
  CHECK(t.total_at_degree(3) == 22);
  // the degree-0 slice is the finite Verma character
  auto a2 = make_root_datum('A', 2);
  auto t2 = verma_character(a2, Vec{0, 0}, 1, 6);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b + a <= 6; ++b) CHECK(t2.at(0, {a, b}) == std::min(a, b) + 1);
  for (int k = 0; k <= 6; ++k) CHECK(verma_character(a1, Vec{0}, 1, 6).at(0, {k}) == 1);
  CHECK_THROWS_AS(verma_character(a1, Vec{0}, 9, 1), PreconditionError);
}

TEST_CASE("product formula matches PBW enumeration") {
  for (bool loop_only : {false, true}) {
    auto a1 = make_root_datum('A', 1);
    CHECK(verma_character(a1, Vec{0}, 5, 3, loop_only).dims == pbw_character(a1, 5, 3, loop_only));
    auto a2 = make_root_datum('A', 2);
    CHECK(verma_character(a2, Vec{0, 0}, 2, 2, loop_only).dims == pbw_character(a2, 2, 2, loop_only));
    auto b2 = make_root_datum('B', 2);
    CHECK(verma_character(b2, Vec{0, 0}, 2, 1, loop_only).dims == pbw_character(b2, 2, 1, loop_only));
  }
}

TEST_CASE("characters are positive and grow with depth") {
  auto a2 = make_root_datum('A', 2);
  for (bool loop_only : {false, true}) {
    auto small = verma_character(a2, Vec{1, 0}, 2, 2, loop_only);
    auto big = verma_character(a2, Vec{1, 0}, 3, 2, loop_only);
    for (const auto& [k, v] : small.dims) {
      CHECK(v > 0);
      CHECK(big.at(k.first, k.second) >= v);
    }
    for (const auto& [k, v] : big.dims) CHECK(v > 0);
  }
}
