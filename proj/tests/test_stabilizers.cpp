#include <random>

#include "afflip/stabilizers.hpp"
#include "doctest.h"

using namespace afflip;

namespace {

GeneratorWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> d(0, n);
  std::vector<int> ls(static_cast<std::size_t>(len));
  for (auto& l : ls) l = d(rng);
  return GeneratorWord(n, ls);
}

AffinePermutation random_product(std::mt19937_64& rng, const std::vector<AffinePermutation>& gens, int len) {
  std::uniform_int_distribution<std::size_t> d(0, gens.size() - 1);
  auto u = AffinePermutation::identity(gens.front().rank());
  for (int i = 0; i < len; ++i) u = u * gens[d(rng)];
  return u;
}

}  // namespace

TEST_CASE("stabilizer generator lists") {
  auto s40 = stabilizer_generators(4, 0);
  CHECK(s40.names == std::vector<std::string>{"g0", "s1", "s2", "s3"});
  auto s43 = stabilizer_generators(4, 3);
  CHECK(s43.names == std::vector<std::string>{"s0", "s1", "s2", "h3"});
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (const auto& g : stabilizer_generators(n, k).generators) {
        CHECK(r_k(g, k) == omega_base(n, k));
        CHECK(is_in_Hk(g, k));
      }
}

TEST_CASE("H_k membership agrees with fixing omega_k") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(is_in_Hk(AffinePermutation::identity(n), k));
      CHECK_FALSE(is_in_Hk(generator(n, n), k));
      if (k >= 1) CHECK(is_in_Hk(element_h(n, k), k));
      int fixed = 0;
      for (int t = 0; t < 300; ++t) {
        auto u = evaluate_word(random_word(rng, n, 1 + t % 30));
        bool fixes = r_k(u, k) == omega_base(n, k);
        CHECK(fixes == is_in_Hk(u, k));
        fixed += fixes;
      }
      // elements built from the generators are always inside
      auto gens = stabilizer_generators(n, k).generators;
      for (int t = 0; t < 100; ++t) {
        auto u = random_product(rng, gens, 1 + t % 20);
        CHECK(is_in_Hk(u, k));
        CHECK(r_k(u, k) == omega_base(n, k));
      }
      (void)fixed;
    }
}

TEST_CASE("split into lower and upper parts") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      auto id = AffinePermutation::identity(n);
      auto [l0, u0] = split_LU(id, k);
      CHECK(l0 == id);
      CHECK(u0 == id);
      if (k >= 1) {
        auto [lh, uh] = split_LU(element_h(n, k), k);
        CHECK(lh == element_h(n, k));
        CHECK(uh == id);
      }
      if (k <= n - 2) {
        auto [lg, ug] = split_LU(element_g(n, k), k);
        CHECK(lg == id);
        CHECK(ug == element_g(n, k));
      }
      auto gens = stabilizer_generators(n, k).generators;
      const Int N = period(n);
      for (int t = 0; t < 60; ++t) {
        auto u = random_product(rng, gens, 1 + t % 15);
        auto [ul, uu] = split_LU(u, k);
        CHECK(ul * uu == u);
        CHECK(uu * ul == u);
        for (Int x = -3 * N; x <= 3 * N; ++x) {
          Int a = residue(n, x);
          bool lower = (a < 0 ? -a : a) <= k;
          if (lower)
            CHECK(uu(x) == x);
          else
            CHECK(ul(x) == x);
        }
        // upper exponents of u^{-1} sum to zero
        Int lam = 0;
        auto ui = inverse(uu);
        for (int j = k + 1; j <= n; ++j) lam += exponent(n, ui[j]);
        CHECK(lam == 0);
      }
      CHECK_THROWS_AS(split_LU(generator(n, n), k), InvalidArgument);
    }
}

TEST_CASE("double cover K_k and M_k") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(r_k(element_v(n), k) == negate(omega_base(n, k)));
      CHECK(is_in_Kk(element_v(n), k));
      CHECK(is_in_Mk(element_v(n), k));
      CHECK(is_in_Mk(AffinePermutation::identity(n), k));
    }
  CHECK_FALSE(is_in_Mk(element_h(3, 1), 1));
  CHECK(is_in_Kk(element_h(3, 1), 1));
  // index two: among sampled elements, K_k hits are H_k hits and their v-translates
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      auto gens = stabilizer_generators(n, k).generators;
      for (int t = 0; t < 50; ++t) {
        auto h = random_product(rng, gens, 1 + t % 10);
        CHECK(is_in_Kk(h, k));
        auto vh = element_v(n) * h;
        CHECK(is_in_Kk(vh, k));
        CHECK_FALSE(is_in_Hk(vh, k));
      }
    }
}

TEST_CASE("transversal") {
  auto t = tau_for(9, 4, {2, 3, 6, 8});
  CHECK(t.pairs == std::vector<std::pair<int, int>>{{1, 6}, {4, 8}});
  auto all = transversal_T(9, 4);
  CHECK(std::find(all.begin(), all.end(), t) != all.end());
  CHECK(transversal_T(5, 2).size() == 10);
  CHECK(tau_for(5, 2, {1, 2}).pairs.empty());
  // each tau sends [k] onto J
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& tau : transversal_T(n, k)) {
        std::vector<int> img;
        for (int i = 1; i <= k; ++i) img.push_back(tau(i));
        std::sort(img.begin(), img.end());
        CHECK(img == tau.J);
        for (int i = 1; i <= n; ++i) CHECK(tau(tau(i)) == i);
      }
}

TEST_CASE("involutive coset representatives") {
  // type C, k = 0: [±1, ..., ±(n-1), (-n)^{*d}]
  auto r0 = involutive_reps(3, 0, GroupType::C, 2);
  CHECK(r0.size() == 4 * 5);
  for (const auto& r : r0) {
    CHECK(std::abs(r.realized[1]) == 1);
    CHECK(std::abs(r.realized[2]) == 2);
    CHECK(residue(3, r.realized[3]) == -3);
  }
  // type C, k = 1, tau = (1 n): [n^{*-d}, ±2, ..., ±(n-1), 1^{*d}]
  for (const auto& r : involutive_reps(4, 1, GroupType::C, 3)) {
    if (r.tau.pairs != std::vector<std::pair<int, int>>{{1, 4}}) continue;
    CHECK(r.realized[1] == star(4, 4, -r.d));
    CHECK(r.realized[4] == star(4, 1, r.d));
  }
  for (auto g : {GroupType::C, GroupType::B})
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k <= n - 1; ++k)
        for (const auto& r : involutive_reps(n, k, g, 4)) {
          CHECK(r.realized * r.realized == AffinePermutation::identity(n));
          if (g == GroupType::B) CHECK(is_in_B_subgroup(r.realized));
        }
}

TEST_CASE("coset map is injective and covering") {
  for (auto g : {GroupType::C, GroupType::B})
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k <= n - 1; ++k) {
        auto rep = coset_map_check(n, k, g, 4, 1);
        CHECK_MESSAGE(rep.injective, "collision at n=" << n << " k=" << k << " " << to_string(g));
        CHECK_MESSAGE(rep.covering, "gap at n=" << n << " k=" << k << " " << to_string(g));
      }
  auto rep = coset_map_check(3, 0, GroupType::C, 4, 1);
  CHECK(rep.ok());
  // identity lands on the class of omega_k
  for (int k = 0; k <= 2; ++k)
    CHECK(signed_class(r_k(AffinePermutation::identity(3), k)).representative ==
          signed_class(omega_base(3, k)).representative);
}

TEST_CASE("type-B generators") {
  for (int n = 2; n <= 6; ++n) {
    auto gs = B_subgroup_generators(n);
    CHECK(gs.size() == static_cast<std::size_t>(n + 1));
    for (const auto& g : gs) CHECK(is_in_B_subgroup(g));
    CHECK(std::find(gs.begin(), gs.end(), generator(n, n)) == gs.end());
    CHECK_FALSE(is_in_B_subgroup(generator(n, n)));
  }
  CHECK(B_subgroup_generators(2)[2] == AffinePermutation(2, {3, 4}));
  // parity reachability: G1 words reach exactly the even states of Omega_{2,0,2}... checked via the
  // image of omega_0 under many random G1 elements having even b
  std::mt19937_64 rng(4);
  auto gs = B_subgroup_generators(3);
  for (int t = 0; t < 200; ++t) {
    auto u = random_product(rng, gs, 1 + t % 25);
    CHECK(is_in_B_subgroup(u));
    CHECK(r_k(u, 0).b % 2 == 0);
  }
}
