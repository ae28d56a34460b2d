#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "afflip/arc.hpp"
#include "afflip/gelfand.hpp"
#include "afflip/geometric.hpp"
#include "doctest.h"

using namespace afflip;

namespace {

FiniteAction cyclic(std::uint32_t N) {
  FiniteAction a;
  std::vector<std::uint32_t> g(N);
  for (std::uint32_t x = 0; x < N; ++x) {
    a.labels.push_back(std::to_string(x));
    g[x] = (x + 1) % N;
  }
  a.generators.push_back(g);
  a.generator_names.push_back("r");
  a.base = 0;
  return a;
}

// S_3 acting on itself by right multiplication: permutations indexed in lexicographic order.
FiniteAction s3_regular() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  FiniteAction a;
  for (std::size_t i = 0; i < perms.size(); ++i) a.labels.push_back(std::to_string(i));
  for (std::array<int, 3> s : {std::array<int, 3>{1, 0, 2}, std::array<int, 3>{0, 2, 1}}) {
    std::vector<std::uint32_t> g;
    for (const auto& q : perms) g.push_back(index({q[static_cast<std::size_t>(s[0])], q[static_cast<std::size_t>(s[1])],
                                                    q[static_cast<std::size_t>(s[2])]}));
    a.generators.push_back(g);
    a.generator_names.push_back("t");
  }
  a.base = 0;
  return a;
}

// S_n on 2-subsets of [n]: the classic commutative, self-paired rank-3 scheme.
FiniteAction pairs_action(int n) {
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pts.emplace_back(i, j);
  auto index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint32_t>(std::find(pts.begin(), pts.end(), std::pair{a, b}) - pts.begin());
  };
  FiniteAction act;
  for (auto [i, j] : pts) act.labels.push_back(std::to_string(i) + std::to_string(j));
  for (int t = 0; t + 1 < n; ++t) {
    auto sw = [&](int x) { return x == t ? t + 1 : x == t + 1 ? t : x; };
    std::vector<std::uint32_t> g;
    for (auto [i, j] : pts) g.push_back(index(sw(i), sw(j)));
    act.generators.push_back(g);
    act.generator_names.push_back("s");
  }
  return act;
}

// Orbital-algebra structure constants computed directly from the orbital matrix.
std::uint64_t pijk_oracle(const OrbitalDecomposition& d, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  auto p = d.first_pair[k];
  std::size_t x = p / d.points, z = p % d.points;
  std::uint64_t c = 0;
  for (std::size_t y = 0; y < d.points; ++y) c += d.of(x, y) == i && d.of(y, z) == j;
  return c;
}

}  // namespace

TEST_CASE("regular cyclic action") {
  auto a = cyclic(3);
  auto d = orbitals(a);
  CHECK(d.rank == 3);
  CHECK(d.sizes == std::vector<std::uint64_t>{3, 3, 3});
  auto c = certify(a);
  CHECK(c.transitive);
  CHECK_FALSE(c.self_paired);
  CHECK(c.self_paired_count == 1);
  CHECK(c.commutative);
  CHECK(c.multiplicity_free);
  CHECK(c.suborbit_sizes == std::vector<std::uint64_t>{1, 1, 1});
  // Z/2 acting regularly: every orbital is self-paired
  CHECK(certify(cyclic(2)).self_paired);
}

TEST_CASE("regular S3 action is not multiplicity-free") {
  auto a = s3_regular();
  auto c = certify(a);
  CHECK(c.transitive);
  CHECK(c.rank == 6);
  CHECK_FALSE(c.commutative);
  CHECK_FALSE(c.multiplicity_free);
  REQUIRE(c.witness.has_value());
  auto d = orbitals(a);
  auto [i, j, k] = *c.witness;
  CHECK(pijk_oracle(d, i, j, k) == c.witness_pij);
  CHECK(pijk_oracle(d, j, i, k) == c.witness_pji);
  CHECK(c.witness_pij != c.witness_pji);
}

TEST_CASE("2-subsets of a 5-set") {
  auto c = certify(pairs_action(5));
  CHECK(c.states == 10);
  CHECK(c.rank == 3);
  CHECK(c.self_paired);
  CHECK(c.multiplicity_free);
}

TEST_CASE("intransitive actions are detected") {
  FiniteAction a;
  a.labels = {"a", "b", "c"};
  a.generators = {{1, 0, 2}};
  a.generator_names = {"g"};
  auto c = certify(a);
  CHECK_FALSE(c.transitive);
  FiniteAction bad = a;
  bad.generators = {{0, 0, 2}};
  CHECK_THROWS_AS(validate_action(bad), InvalidArgument);
}

TEST_CASE("signed flip action is multiplicity-free") {
  auto a = build_action({"omega_signed", 3, 0, 5, GroupType::C, true});
  CHECK(a.size() == 20);
  auto c = certify(a);
  CHECK(c.transitive);
  CHECK(c.self_paired);
  CHECK(c.commutative);
  CHECK(c.multiplicity_free);
  REQUIRE(a.base.has_value());
  auto r = coset_involution_check(a, *a.base);
  CHECK(r.all_self_paired);
  std::uint64_t total = 0;
  for (const auto& s : r.suborbits) total += s.size;
  CHECK(total == a.size());
}

TEST_CASE("unsigned flip action fails for m >= 3") {
  auto a = build_action({"omega", 3, 0, 5, GroupType::C, false});
  CHECK(a.size() == 40);
  auto c = certify(a);
  CHECK(c.transitive);
  CHECK_FALSE(c.multiplicity_free);
  REQUIRE(c.witness.has_value());
  auto d = orbitals(a);
  auto [i, j, k] = *c.witness;
  CHECK(pijk_oracle(d, i, j, k) == c.witness_pij);
  CHECK(pijk_oracle(d, j, i, k) == c.witness_pji);
  for (Int m : {1, 2}) {
    auto cm = certify(build_action({"omega", 3, 0, m, GroupType::C, false}));
    CHECK(cm.multiplicity_free);
    CHECK_FALSE(cm.witness.has_value());
  }
}

TEST_CASE("rank does not depend on generator order") {
  auto a = build_action({"omega", 3, 1, 4, GroupType::C, false});
  auto r0 = orbitals(a).rank;
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    auto b = a;
    std::shuffle(b.generators.begin(), b.generators.end(), rng);
    CHECK(orbitals(b).rank == r0);
  }
}

TEST_CASE("signed quotient never has more orbitals") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (Int m = 1; m <= n + 3; ++m) {
        auto u = certify(build_action({"omega", n, k, m, GroupType::C, false}));
        auto s = certify(build_action({"omega_signed", n, k, m, GroupType::C, true}));
        CHECK(s.rank <= u.rank);
      }
}

TEST_CASE("quotient and orbit restriction") {
  auto a = cyclic(4);
  auto q = quotient_by_involution(a, {2, 3, 0, 1});
  CHECK(q.size() == 2);
  CHECK(q.base == std::optional<std::size_t>{0});
  CHECK_THROWS_AS(quotient_by_involution(a, {1, 0, 2, 3}), InvalidArgument);
  FiniteAction b;
  b.labels = {"a", "b", "c", "d"};
  b.generators = {{1, 0, 3, 2}};
  b.generator_names = {"g"};
  auto r = restrict_to_orbit(b, 2);
  CHECK(r.labels == std::vector<std::string>{"c", "d"});
  CHECK(r.base == std::optional<std::size_t>{0});
  CHECK(orbit_of(b, 3) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("type-B restriction") {
  for (auto [n, k, m] : {std::tuple{3, 1, Int{5}}, std::tuple{2, 0, Int{4}}, std::tuple{2, 1, Int{5}}}) {
    auto r = b_subgroup_action_check(n, k, m);
    CHECK(r.certificate.transitive);
    CHECK(r.certificate.multiplicity_free);
    CHECK(r.subgroup_orbit <= r.full_orbit);
    CHECK(r.full_orbit * 2 >= orbit_size_formula(n, k, m) / 1);
  }
  auto a = build_action({"omega_signed", 2, 0, 4, GroupType::B, true});
  CHECK(a.generators.size() == 3);
}

TEST_CASE("model actions transport to the flip action") {
  auto omega_index = [](const FiniteAction& om) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < om.size(); ++i) idx.emplace(om.labels[i], i);
    return idx;
  };
  auto compare = [&](const FiniteAction& model, const FiniteAction& om, auto to_state) {
    auto idx = omega_index(om);
    std::vector<std::size_t> map;
    for (const auto& l : model.labels) map.push_back(idx.at(to_string(to_state(l))));
    auto dm = orbitals(model), dom = orbitals(om);
    CHECK(orbitals_correspond(dm, dom, map));
    CHECK(map[*model.base] == *om.base);
  };
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k <= n - 1; ++k)
      compare(build_action({"arc", n, k, 0, GroupType::C, false}), build_action({"omega", n, k, n + 2, GroupType::C, false}),
              [](const std::string& l) { return phi_arc(parse_arc(l)); });
    compare(build_action({"ctft", n, 0, 0, GroupType::C, false}), build_action({"omega", n, 0, n + 4, GroupType::C, false}),
            [n](const std::string& l) { return phi_tft(parse_ctft(n + 4, l)); });
    compare(build_action({"lf", n, 0, 0, GroupType::C, false}), build_action({"omega", n, 0, n + 3, GroupType::C, false}),
            [n](const std::string& l) { return phi_lf(parse_lf(n + 3, l)); });
    compare(build_action({"gc", n, 0, 0, GroupType::C, false}), build_action({"omega", n, 0, n + 3, GroupType::C, false}),
            [n](const std::string& l) { return phi_lf(psi(parse_gc(n + 3, l))); });
  }
  // generators agree pointwise, not only the orbitals
  auto lf = build_action({"lf", 3, 0, 0, GroupType::C, false});
  auto om = build_action({"omega", 3, 0, 6, GroupType::C, false});
  auto idx = omega_index(om);
  for (std::size_t g = 0; g < lf.generators.size(); ++g)
    for (std::size_t x = 0; x < lf.size(); ++x) {
      auto sx = idx.at(to_string(phi_lf(parse_lf(6, lf.labels[x]))));
      auto sy = idx.at(to_string(phi_lf(parse_lf(6, lf.labels[lf.generators[g][x]]))));
      CHECK(om.generators[g][sx] == sy);
    }
}

TEST_CASE("model sizes") {
  CHECK(model_size_formula({"arc", 4, 0, 0, GroupType::C, false}) == 96);
  CHECK(model_size_formula({"ctft", 4, 0, 0, GroupType::C, false}) == 128);
  CHECK(model_size_formula({"lf", 4, 0, 0, GroupType::C, false}) == 112);
  CHECK(build_action({"gc", 3, 0, 0, GroupType::C, false}).size() == 48);
  CHECK_THROWS_AS(build_action({"ctft", 3, 1, 0, GroupType::C, false}), InvalidArgument);
  CHECK_THROWS_AS(build_action({"omega", 3, 3, 5, GroupType::C, false}), InvalidArgument);
  CHECK_THROWS_AS(build_action({"torus", 3, 0, 5, GroupType::C, false}), InvalidArgument);
}
