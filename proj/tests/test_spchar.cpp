#include <catch_amalgamated.hpp>

#include <numeric>

#include "ihc/spchar.hpp"

using namespace ihc;

namespace {

// Weyl dimension formula for C_g with l = lambda + rho, rho = (g, ..., 1):
// prod_{i<j} (l_i^2 - l_j^2) prod_i l_i over the same product for rho.
long long weyl_dim_oracle(const std::vector<int>& lam) {
  int g = static_cast<int>(lam.size());
  std::vector<long long> l(g), r(g);
  for (int i = 0; i < g; ++i) {
    r[i] = g - i;
    l[i] = lam[i] + r[i];
  }
  // numerator and denominator are products of small integers; use long double
  // to avoid overflow, then round.
  long double num = 1, den = 1;
  for (int i = 0; i < g; ++i) {
    num *= l[i];
    den *= r[i];
    for (int j = i + 1; j < g; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  return std::llround(num / den);
}

void dominant_weights(int g, int maxsum, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == g) {
    out.push_back(cur);
    return;
  }
  int hi = cur.empty() ? maxsum : cur.back();
  int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int v = 0; v <= hi && used + v <= maxsum; ++v) {
    cur.push_back(v);
    dominant_weights(g, maxsum, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> dominant_weights(int g, int maxsum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  dominant_weights(g, maxsum, cur, out);
  return out;
}

long long mult_in(const Decomposition& d, const std::vector<int>& lam) {
  for (const auto& [l, m] : d)
    if (l.entries == lam) return m;
  return 0;
}

// e_c polynomials for g = 1 by Clebsch-Gordan: each fiber factor contributes
// (1 + L) V_0 - V_1, and V_a x V_1 = V_{a+1} + L V_{a-1}.
std::map<int, Poly> ec_g1_oracle(int s) {
  std::map<int, Poly> cur{{0, Poly({1})}};
  for (int t = 0; t < s; ++t) {
    std::map<int, Poly> nxt;
    for (const auto& [a, p] : cur) {
      nxt[a] = nxt[a] + p * Poly({1, 1});
      nxt[a + 1] = nxt[a + 1] - p;
      if (a > 0) nxt[a - 1] = nxt[a - 1] - p * Poly({0, 1});
    }
    cur = nxt;
  }
  return cur;
}

}  // namespace

TEST_CASE("dominant weights") {
  CHECK(DomWeight::padded({2}, 3).entries == std::vector<int>{2, 0, 0});
  CHECK_THROWS_AS(DomWeight::padded({1, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(DomWeight::padded({1, 1, 1}, 2), InvalidInput);
  CHECK(DomWeight({4, 2}).tau() == std::vector<int>{6, 3});
  CHECK(DomWeight({4, 2}).size() == 6);
  CHECK(dominant_rep({-3, 1, -5}) == Weight{5, 3, 1});
  CHECK(dominated({1, 1, 0}, {2, 0, 0}));
  CHECK_FALSE(dominated({2, 0, 0}, {1, 1, 0}));
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(DomWeight({1, 1, 1})) == 14);
  CHECK(weyl_dim(DomWeight({1, 0})) == 4);
  CHECK(weyl_dim(DomWeight({1, 1})) == 5);
  CHECK(weyl_dim(DomWeight({6, 6, 6})) == weyl_dim_oracle({6, 6, 6}));
  for (int g = 1; g <= 4; ++g)
    for (const auto& lam : dominant_weights(g, g <= 2 ? 10 : 6)) {
      INFO(DomWeight(lam).str());
      CHECK(weyl_dim(DomWeight(lam)) == weyl_dim_oracle(lam));
    }
}

TEST_CASE("characters are Weyl invariant") {
  for (const auto& lam : dominant_weights(3, 5)) {
    CharPoly c = weyl_character(DomWeight(lam));
    CHECK(c.weyl_invariant());
    CHECK(c.coeffs.at(lam) == 1);
  }
  CharPoly bad;
  bad.g = 1;
  bad.coeffs[{1}] = 1;
  CHECK_FALSE(bad.weyl_invariant());
  CHECK_THROWS_AS(decompose(bad), NotACharacter);
}

TEST_CASE("tensor powers of fundamental representations") {
  CharPoly v3 = weyl_character(DomWeight({1, 1, 1}));
  CharPoly v2 = weyl_character(DomWeight({1, 1, 0}));
  auto power = [](const CharPoly& a, int k) {
    CharPoly r = a;
    for (int i = 1; i < k; ++i) r = r * a;
    return r;
  };
  Decomposition d6 = decompose(power(v3, 6));
  CHECK(mult_in(d6, {6, 6, 6}) == 1);
  CHECK(mult_in(d6, {6, 6, 4}) == 5);
  CHECK(mult_in(d6, {6, 6, 2}) == 9);
  CHECK(mult_in(d6, {6, 6, 0}) == 5);
  Decomposition d42 = decompose(power(v3, 4) * power(v2, 2));
  CHECK(mult_in(d42, {6, 6, 6}) == 0);
  CHECK(mult_in(d42, {6, 6, 4}) == 1);
  CHECK(mult_in(d42, {6, 6, 2}) == 3);
  CHECK(mult_in(d42, {6, 6, 0}) == 2);
  Decomposition d24 = decompose(power(v3, 2) * power(v2, 4));
  CHECK(mult_in(d24, {6, 6, 4}) == 0);
  CHECK(mult_in(d24, {6, 6, 2}) == 1);
  CHECK(mult_in(d24, {6, 6, 0}) == 1);
  Decomposition d06 = decompose(power(v2, 6));
  CHECK(mult_in(d06, {6, 6, 2}) == 0);
  CHECK(mult_in(d06, {6, 6, 0}) == 1);
  // total dimension is preserved
  long long sum = 0;
  for (const auto& [l, m] : d6) sum += m * weyl_dim(l);
  CHECK(sum == 14LL * 14 * 14 * 14 * 14 * 14);
}

TEST_CASE("exterior powers of the standard local system") {
  LocalSystemDecomp w = wedge_local_system(3, 3);
  CHECK(w == LocalSystemDecomp{{DomWeight({1, 1, 1}), 0, 1}, {DomWeight({1, 0, 0}), 1, 1}});
  w = wedge_local_system(3, 4);
  CHECK(w == LocalSystemDecomp{{DomWeight({1, 1, 0}), 1, 1}, {DomWeight({0, 0, 0}), 2, 1}});
  CHECK(wedge_local_system(2, 0) == LocalSystemDecomp{{DomWeight({0, 0}), 0, 1}});
  CHECK(wedge_local_system(2, 4) == LocalSystemDecomp{{DomWeight({0, 0}), 2, 1}});
  CHECK_THROWS_AS(wedge_local_system(2, 5), OutOfRange);
  for (int g = 1; g <= 4; ++g)
    for (int i = 0; i <= 2 * g; ++i) {
      long long dim = 0;
      for (const auto& e : wedge_local_system(g, i)) dim += e.mult * weyl_dim(e.lambda);
      long long binom = 1;
      for (int t = 0; t < i; ++t) binom = binom * (2 * g - t) / (t + 1);
      CHECK(dim == binom);
    }
}

TEST_CASE("fiber cohomology") {
  LocalSystemDecomp r = rpi_decomposition(1, 2, 2);
  CHECK(r == LocalSystemDecomp{{DomWeight({2}), 0, 1}, {DomWeight({0}), 1, 3}});
  LocalSystemDecomp r1 = rpi_decomposition(1, 2, 2, 3);
  CHECK(r1 == LocalSystemDecomp{{DomWeight({2}), 3, 1}, {DomWeight({0}), 4, 3}});
  CHECK_THROWS_AS(rpi_decomposition(1, 2, 2, -1), InvalidInput);
  // every degree has total dimension C(2gs, q)
  for (int g = 1; g <= 3; ++g)
    for (int s = 1; s <= 3; ++s) {
      long long binom = 1;
      for (int q = 0; q <= 2 * g * s; ++q) {
        CHECK(fiber_cohomology_character(g, s, q).mass() == binom);
        binom = binom * (2 * g * s - q) / (q + 1);
      }
    }
  // top degree is the trivial system twisted by gs
  CHECK(rpi_decomposition(2, 2, 8) == LocalSystemDecomp{{DomWeight({0, 0}), 4, 1}});
}

TEST_CASE("Euler characteristic multiplicities") {
  CHECK(ec_mult_poly(1, 1, DomWeight({0})) == Poly({1, 1}));
  CHECK(ec_mult_poly(1, 1, DomWeight({1})) == Poly({-1}));
  CHECK(ec_mult_poly(1, 1, DomWeight({2})).is_zero());
  for (int s = 1; s <= 6; ++s)
    for (const auto& [a, p] : ec_g1_oracle(s)) {
      INFO("s=" << s << " a=" << a);
      CHECK(ec_mult_poly(1, s, DomWeight({a})) == p);
    }
  CHECK_THROWS_AS(ec_mult_poly(2, 1, DomWeight({0})), InvalidInput);
}

TEST_CASE("signed Euler characteristic multiplicities") {
  for (int s = 1; s <= 4; ++s)
    for (const auto& lam : dominant_weights(2, s)) {
      if (lam[0] > s) continue;
      auto [p, m] = ec_mult_poly_signed(2, s, DomWeight(lam));
      CHECK(p + m == ec_mult_poly(2, s, DomWeight(lam)));
    }
  // s = 1: the involution is -1 on the fiber, so V_lambda with |lambda| odd
  // sits in the minus part.
  auto [p, m] = ec_mult_poly_signed(1, 1, DomWeight({1}));
  CHECK(p.is_zero());
  CHECK(m == Poly({-1}));
  auto [p0, m0] = ec_mult_poly_signed(1, 1, DomWeight({0}));
  CHECK(p0 == Poly({1, 1}));
  CHECK(m0.is_zero());
  CHECK_THROWS_AS(ec_mult_poly_signed(1, 0, DomWeight({0})), InvalidInput);
  CHECK_THROWS_AS(ec_mult_poly_signed(1, 2, DomWeight({0}), 2), InvalidInput);
}
