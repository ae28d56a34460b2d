#include <random>
#include <set>

#include "afflip/flip_action.hpp"
#include "doctest.h"

using namespace afflip;

namespace {

OmegaState S(std::vector<std::int8_t> a, Int b, Int m = 0) { return OmegaState(std::move(a), b, m); }

// Every state of Z_3^n x Z_m.
std::vector<OmegaState> all_states(int n, Int m) {
  std::vector<OmegaState> out;
  for (int k = 0; k <= n; ++k)
    for (auto& x : enumerate_orbit(n, k, m)) out.push_back(x);
  return out;
}

// Independent k-sign: classify by explicit residue scan.
int eps_oracle(int n, int k, Int t) {
  const Int N = 2 * n + 1;
  Int r = ((t % N) + N) % N;  // 0..2n
  if (r == 0) return 0;
  if (r >= k + 1 && r <= n) return 1;
  if (r >= 1 && r <= k) return 0;
  Int neg = N - r;  // t == -neg
  return neg <= k ? 0 : -1;
}

}  // namespace

TEST_CASE("single generators") {
  CHECK(rho_generator(0, S({1, 1}, 0)) == S({-1, 1}, 0));
  CHECK(rho_generator(2, S({1, 1}, 0)) == S({1, -1}, 1));
  CHECK(rho_generator(1, S({0, 0}, 5)) == S({0, 0}, 5));
  CHECK(rho_generator(2, S({1, 1}, 4, 5)) == S({1, -1}, 0, 5));
  CHECK(rho_generator(2, S({1, -1}, 0, 5)) == S({1, 1}, 4, 5));
  CHECK_THROWS_AS(rho_generator(3, S({1, 1}, 0)), InvalidArgument);
}

TEST_CASE("rho_word order") {
  auto x = S({1, 0, -1}, 2);
  CHECK(rho_word(GeneratorWord(3, {}), x) == x);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> u, v;
    for (int i = 0; i < 8; ++i) u.push_back(d(rng)), v.push_back(d(rng));
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(rho_word(GeneratorWord(3, uv), x) == rho_word(GeneratorWord(3, u), rho_word(GeneratorWord(3, v), x)));
  }
}

TEST_CASE("Coxeter relations on all states, n <= 4, m <= 9") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<GeneratorWord> rels;
    for (int i = 0; i <= n; ++i) rels.emplace_back(n, std::vector<int>{i, i});
    for (int i = 0; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) rels.emplace_back(n, std::vector<int>{i, j, i, j});
    for (int i = 1; i <= n - 2; ++i) rels.emplace_back(n, std::vector<int>{i, i + 1, i, i + 1, i, i + 1});
    rels.emplace_back(n, std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1});
    rels.emplace_back(n, std::vector<int>{n - 1, n, n - 1, n, n - 1, n, n - 1, n});
    for (Int m = 1; m <= 9; ++m)
      for (const auto& x : all_states(n, m))
        for (const auto& r : rels) CHECK(rho_word(r, x) == x);
  }
}

TEST_CASE("k-sign") {
  CHECK(epsilon(3, 0, 3) == 1);
  CHECK(epsilon(3, 0, 4) == -1);
  CHECK(epsilon(3, 1, -1) == 0);
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(epsilon(n, k, 0) == 0);
      for (Int t = -40; t <= 40; ++t) CHECK(epsilon(n, k, t) == eps_oracle(n, k, t));
    }
}

TEST_CASE("P_k and r_k") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(P_k(AffinePermutation::identity(n), k) == 0);
      CHECK(r_k(AffinePermutation::identity(n), k) == omega_base(n, k));
      Int s = 0;
      for (int j = 1; j <= n; ++j) s += epsilon(n, k, j) * j;
      CHECK(s == (k + n + 1) * (n - k) / 2);
    }
  CHECK(P_k(generator(2, 2), 0) == 1);
  CHECK(r_k(generator(2, 2), 0) == S({1, -1}, 1));
  CHECK(r_k(element_v(2), 0) == S({-1, -1}, 0));
}

TEST_CASE("r_k matches the action on random words, n <= 6") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    std::uniform_int_distribution<int> d(0, n);
    std::uniform_int_distribution<int> len(0, 50);
    for (int k = 0; k <= n - 1; ++k)
      for (int t = 0; t < 200; ++t) {
        std::vector<int> ls(static_cast<std::size_t>(len(rng)));
        for (auto& l : ls) l = d(rng);
        GeneratorWord w(n, ls);
        auto u = evaluate_word(w);
        CHECK(rho_word(w, omega_base(n, k)) == r_k(u, k));
        CHECK(rho_word(w, omega_base(n, k, 7)) == r_k(u, k, 7));
      }
  }
}

TEST_CASE("negation equivariance and zero count") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& x : all_states(n, 5))
      for (int i = 0; i <= n; ++i) {
        CHECK(rho_generator(i, negate(x)) == negate(rho_generator(i, x)));
        CHECK(rho_generator(i, x).zero_count() == x.zero_count());
      }
}

TEST_CASE("orbit enumeration and transitivity") {
  CHECK(enumerate_orbit(4, 0, 8).size() == 128);
  CHECK(enumerate_orbit(2, 1, 3).size() == 12);
  CHECK(enumerate_orbit(3, 2, 1).size() == 6);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (Int m = 1; m <= 9; ++m) CHECK(enumerate_orbit(n, k, m).size() == orbit_size_formula(n, k, m));
  auto t = transitivity_check(2, 0, 5);
  CHECK(t.transitive);
  CHECK(t.reached == 20);
  for (std::size_t i = 0; i < t.states.size(); ++i) CHECK(rho_word(t.witness[i], omega_base(2, 0, 5)) == t.states[i]);
  auto t2 = transitivity_check(3, 1, 1);
  CHECK(t2.transitive);
  CHECK(t2.reached == 12);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (Int m = 1; m <= 6; ++m) CHECK(transitivity_check(n, k, m).transitive);
  auto triv = bfs_orbit(S({0, 0, 0}, 4));
  CHECK(triv.reached == 1);
}

TEST_CASE("signed quotient") {
  CHECK(signed_quotient(enumerate_orbit(4, 0, 8)).size() == 64);
  auto one = signed_quotient({S({0, 0, 0}, 0, 1)});
  REQUIRE(one.size() == 1);
  CHECK(one[0].self_negative);
  // brute-force pairing on Omega_{2,1,2}
  auto xs = enumerate_orbit(2, 1, 2);
  CHECK(xs.size() == 8);
  std::set<std::set<OmegaState>> pairs;
  for (const auto& x : xs) pairs.insert({x, negate(x)});
  CHECK(signed_quotient(xs).size() == pairs.size());
  CHECK(pairs.size() == 4);
  CHECK_THROWS_AS(signed_quotient({S({1, 0}, 1, 3)}), InvalidArgument);
  // representative is the smaller of x and -x
  for (const auto& c : signed_quotient(enumerate_orbit(3, 1, 5))) CHECK(!(negate(c.representative) < c.representative));
}

TEST_CASE("state text form") {
  auto x = parse_state("(1,-1,0;3)");
  CHECK(x == S({1, -1, 0}, 3));
  CHECK(to_string(x) == "(1,-1,0;3)");
  CHECK(parse_state("(1,-1;7)", 5).b == 2);
  CHECK_THROWS_AS(parse_state("(2,0;1)"), InvalidArgument);
  CHECK_THROWS_AS(parse_state("1,0;1"), InvalidArgument);
}

TEST_CASE("packed encoding is injective on orbits") {
  auto xs = enumerate_orbit(5, 1, 9);
  std::set<std::uint64_t> keys;
  for (const auto& x : xs) keys.insert(encode(x));
  CHECK(keys.size() == xs.size());
}
