#include "operforge/linkage.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "operforge/errors.hpp"
#include "operforge/weyl.hpp"

namespace operforge {

namespace {

bool positive_integer(const Rational& x) { return x.get_den() == 1 && x > 0; }

Vec rho_weight(const RootDatum& rd) { return Vec(rd.rank, Rational(1)); }

int signed_height(const std::vector<int>& beta) {
  int s = 0;
  for (int b : beta) s += b;
  return s;
}

}  // namespace

Rational coroot_pairing(const RootDatum& rd, int k, const Vec& weight) {
  Vec c = rd.coroot(k);
  Rational s = 0;
  for (int i = 0; i < rd.rank; ++i) s += c[i] * weight[i];
  return s;
}

Vec root_to_weight(const RootDatum& rd, const std::vector<int>& beta) {
  Vec w(rd.rank);
  for (int i = 0; i < rd.rank; ++i) w[i] = rd.pairing(beta, i);
  return w;
}

Vec weight_to_root_coords(const RootDatum& rd, const Vec& weight) {
  Matrix A(rd.rank, rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) A(i, j) = rd.cartan[i][j];
  return inverse(A)->apply(weight);
}

bool is_antidominant_weight(const RootDatum& rd, const Vec& lambda) {
  if (int(lambda.size()) != rd.rank) throw PreconditionError("weight has the wrong rank");
  bool by_pairing = true;
  for (int k = 0; k < rd.num_positive(); ++k)
    if (positive_integer(coroot_pairing(rd, k, lambda))) by_pairing = false;

  // (lambda - Q_+) meets W(lambda) only in lambda.
  bool by_orbit = true;
  for (const auto& mu : weyl_orbit(rd, lambda)) {
    if (mu == lambda) continue;
    Vec beta = weight_to_root_coords(rd, lambda - mu);
    bool in_cone = true;
    for (const auto& b : beta)
      if (b.get_den() != 1 || b < 0) in_cone = false;
    if (in_cone) by_orbit = false;
  }
  if (by_pairing != by_orbit) throw Error("anti-dominance criteria disagree");
  return by_pairing;
}

std::vector<AffineWeight> kk_steps(const RootDatum& rd, const AffineWeight& mu, const Rational& bound) {
  std::vector<AffineWeight> out;
  Vec shifted = mu.finite + rho_weight(rd);
  for (int k = 0; k < rd.num_positive(); ++k) {
    Rational p = coroot_pairing(rd, k, shifted);
    Vec alpha = root_to_weight(rd, rd.positive_roots[k]);
    // The level of mu + rho is zero, so alpha + m delta and -alpha + m delta
    // pair with mu + rho like +-alpha.
    if (positive_integer(p)) {
      Vec f = mu.finite - scaled(alpha, p);
      for (Rational n = mu.n; n <= bound; n += p) out.push_back({n, f});
    } else if (positive_integer(-p)) {
      Vec f = mu.finite + scaled(alpha, -p);
      for (Rational n = mu.n - p; n <= bound; n -= p) out.push_back({n, f});
    }
  }
  // Imaginary roots m delta: the condition holds for every b > 0.
  for (Rational n = mu.n + 1; n <= bound; n += 1) out.push_back({n, mu.finite});
  return out;
}

std::vector<AffineWeight> kk_chain_search(const RootDatum& rd, const AffineWeight& start, int depth, int max_depth) {
  if (int(start.finite.size()) != rd.rank) throw PreconditionError("weight has the wrong rank");
  if (depth < 0 || depth > max_depth)
    throw PreconditionError("chain depth " + std::to_string(depth) + " exceeds the bound " + std::to_string(max_depth));
  Rational bound = start.n + depth;
  std::set<AffineWeight> seen{start};
  std::deque<AffineWeight> queue{start};
  while (!queue.empty()) {
    AffineWeight mu = queue.front();
    queue.pop_front();
    for (auto& nu : kk_steps(rd, mu, bound))
      if (seen.insert(nu).second) queue.push_back(nu);
  }
  return {seen.begin(), seen.end()};
}

bool verma_irreducible_critical(const RootDatum& rd, const Vec& lambda) {
  return is_antidominant_weight(rd, lambda + rho_weight(rd));
}

bool chain_finds_submodule(const RootDatum& rd, const Vec& lambda, int depth) {
  for (const auto& mu : kk_chain_search(rd, {Rational(0), lambda}, depth, depth)) {
    if (mu.finite == lambda) continue;
    bool in_cone = true;
    for (const auto& b : weight_to_root_coords(rd, lambda - mu.finite))
      if (b.get_den() != 1 || b < 0) in_cone = false;
    if (in_cone) return true;
  }
  return false;
}

CartanOrbitPoint central_character(char family, int rank, const Vec& lambda) {
  auto dual = build_dual_algebra(family, rank);
  if (int(lambda.size()) != rank) throw PreconditionError("weight has the wrong rank");
  Vec x = -lambda - Vec(rank, Rational(1));
  return kostant_project(*dual, dual->embed_h(dual->coweight_to_h(x)));
}

long long CharacterTable::at(int n, const std::vector<int>& beta) const {
  auto it = dims.find({n, beta});
  return it == dims.end() ? 0 : it->second;
}

long long CharacterTable::total_at_degree(int n) const {
  long long s = 0;
  for (const auto& [key, d] : dims)
    if (key.first == n) s += d;
  return s;
}

CharacterTable verma_character(const RootDatum& rd, const Vec& lambda, int depth, int height, bool loop_only,
                               int max_depth) {
  if (int(lambda.size()) != rd.rank) throw PreconditionError("weight has the wrong rank");
  if (depth < 0 || depth > max_depth)
    throw PreconditionError("character depth " + std::to_string(depth) + " exceeds the bound " +
                            std::to_string(max_depth));
  if (height < 0) throw PreconditionError("height bound must be nonnegative");
  const int r = rd.rank, h = rd.coxeter_number;
  // Every positive affine root b + m delta has m h + ht(b) > 0, which bounds
  // the number of factors contributing to the truncated table.
  const int budget = depth * h + height;
  auto affine_height = [&](int m, const std::vector<int>& beta) { return m * h + signed_height(beta); };

  struct Factor {
    int m;
    std::vector<int> beta;
  };
  std::vector<Factor> factors;
  for (int m = loop_only ? 1 : 0; m <= depth; ++m) {
    for (const auto& a : rd.positive_roots) {
      factors.push_back({m, a});
      if (m >= 1) {
        std::vector<int> neg(a);
        for (int& x : neg) x = -x;
        factors.push_back({m, neg});
      }
    }
    if (m >= 1)
      for (int i = 0; i < r; ++i) factors.push_back({m, std::vector<int>(r, 0)});
  }

  using Key = std::pair<int, std::vector<int>>;
  std::map<Key, long long> series{{{0, std::vector<int>(r, 0)}, 1}};
  for (const auto& f : factors) {
    if (affine_height(f.m, f.beta) > budget) continue;
    // Multiply by 1/(1 - x): res[k] = series[k] + res[k - x], filled in
    // order of affine height since x has positive affine height.
    std::set<Key> all;
    for (const auto& [k, v] : series) all.insert(k);
    std::vector<Key> keys(all.begin(), all.end());
    for (const auto& k : keys) {
      Key cur = k;
      while (true) {
        Key nk{cur.first + f.m, cur.second};
        for (int i = 0; i < r; ++i) nk.second[i] += f.beta[i];
        if (nk.first > depth || affine_height(nk.first, nk.second) > budget) break;
        all.insert(nk);
        cur = nk;
      }
    }
    std::vector<Key> sorted(all.begin(), all.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Key& a, const Key& b) {
      return affine_height(a.first, a.second) < affine_height(b.first, b.second);
    });
    std::map<Key, long long> res;
    for (const auto& k : sorted) {
      long long v = 0;
      if (auto it = series.find(k); it != series.end()) v = it->second;
      Key pk{k.first - f.m, k.second};
      for (int i = 0; i < r; ++i) pk.second[i] -= f.beta[i];
      if (auto it = res.find(pk); it != res.end()) v += it->second;
      if (v) res[k] = v;
    }
    series = std::move(res);
  }

  CharacterTable t;
  t.lambda = lambda;
  t.depth = depth;
  t.height = height;
  t.loop_only = loop_only;
  for (const auto& [k, v] : series)
    if (k.first <= depth && signed_height(k.second) <= height) t.dims[k] = v;
  return t;
}

}  // namespace operforge
