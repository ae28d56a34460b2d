#include "afflip/stabilizers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace afflip {

namespace {

void check_nk(int n, int k) {
  if (n < 2) throw InvalidArgument("rank must be at least 2");
  if (k < 0 || k > n - 1) throw InvalidArgument("k must satisfy 0 <= k <= n-1");
}

}  // namespace

StabilizerSpec stabilizer_generators(int n, int k) {
  check_nk(n, k);
  StabilizerSpec spec{n, k, {}, {}};
  auto add = [&](AffinePermutation g, std::string name) {
    spec.generators.push_back(std::move(g));
    spec.names.push_back(std::move(name));
  };
  for (int i = 0; i < k; ++i) add(generator(n, i), "s" + std::to_string(i));
  if (k >= 1) add(element_h(n, k), "h" + std::to_string(k));
  if (k <= n - 2) add(element_g(n, k), "g" + std::to_string(k));
  for (int i = k + 1; i <= n - 1; ++i) add(generator(n, i), "s" + std::to_string(i));
  const auto w = omega_base(n, k);
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    if (r_k(spec.generators[i], k) != w) throw std::logic_error("stabilizer generator " + spec.names[i] + " moves omega_k");
  return spec;
}

bool is_in_Hk(const AffinePermutation& u, int k) {
  const int n = u.rank();
  check_nk(n, k);
  auto ui = inverse(u);
  Int lam = 0;
  for (int i = 1; i <= n; ++i) {
    int e = epsilon(n, k, ui[i]);
    if (e != (i <= k ? 0 : 1)) return false;
    if (i > k) lam += exponent(n, ui[i]);
  }
  return lam == 0;
}

std::pair<AffinePermutation, AffinePermutation> split_LU(const AffinePermutation& u, int k) {
  const int n = u.rank();
  if (!is_in_Hk(u, k)) throw InvalidArgument("split_LU requires an element of H_k");
  std::vector<Int> lw(static_cast<std::size_t>(n)), uw(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    lw[static_cast<std::size_t>(i - 1)] = i <= k ? u[i] : i;
    uw[static_cast<std::size_t>(i - 1)] = i <= k ? i : u[i];
  }
  return {AffinePermutation(n, std::move(lw)), AffinePermutation(n, std::move(uw))};
}

bool is_in_Kk(const AffinePermutation& u, int k) {
  return is_in_Hk(u, k) || is_in_Hk(element_v(u.rank()) * u, k);
}

bool is_in_Mk(const AffinePermutation& u, int k) { return is_in_Kk(u, k) && is_in_B_subgroup(u); }

std::vector<GeneratorWord> B_subgroup_generator_words(int n) {
  std::vector<GeneratorWord> out;
  for (int i = 0; i < n; ++i) out.emplace_back(n, std::vector<int>{i});
  out.emplace_back(n, std::vector<int>{n, n - 1, n});
  return out;
}

std::vector<AffinePermutation> B_subgroup_generators(int n) {
  std::vector<AffinePermutation> out;
  for (const auto& w : B_subgroup_generator_words(n)) out.push_back(evaluate_word(w));
  return out;
}

int TauInvolution::operator()(int x) const {
  for (auto [i, j] : pairs) {
    if (x == i) return j;
    if (x == j) return i;
  }
  return x;
}

TauInvolution tau_for(int n, int k, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  if (static_cast<int>(J.size()) != k || std::adjacent_find(J.begin(), J.end()) != J.end() ||
      (!J.empty() && (J.front() < 1 || J.back() > n)))
    throw InvalidArgument("J must be a k-subset of [n]");
  std::vector<int> L, U;
  for (int i = 1; i <= k; ++i)
    if (!std::binary_search(J.begin(), J.end(), i)) L.push_back(i);
  for (int j : J)
    if (j > k) U.push_back(j);
  TauInvolution t;
  t.J = J;
  for (std::size_t r = 0; r < L.size(); ++r) t.pairs.emplace_back(L[r], U[r]);
  return t;
}

std::vector<TauInvolution> transversal_T(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("k must satisfy 0 <= k <= n");
  std::vector<TauInvolution> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) J.push_back(i + 1);
    out.push_back(tau_for(n, k, std::move(J)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::string to_string(GroupType g) { return g == GroupType::C ? "C" : "B"; }

GroupType parse_group_type(std::string_view s) {
  if (s == "C" || s == "c") return GroupType::C;
  if (s == "B" || s == "b") return GroupType::B;
  throw InvalidArgument("group type must be C or B");
}

namespace {

// A family fixes some window entries as functions of d and restricts d.
struct Family {
  std::string name;
  std::map<int, std::function<Int(Int)>> fixed;
  int d_parity = -1;  // -1: any d
};

std::vector<Family> families(int n, const TauInvolution& tau, GroupType g) {
  const Int N = period(n);
  const bool top_paired = !tau.pairs.empty() && tau.pairs.back().second == n;
  const int t1 = tau(1);
  std::vector<Family> out;
  if (top_paired) {
    const int it = tau.pairs.back().first;
    Family f{"top-pair", {}, -1};
    f.fixed[n] = [=](Int d) { return it + N * d; };
    f.fixed[it] = [=](Int d) { return n - N * d; };
    if (g == GroupType::B && t1 == 1) f.fixed[1] = [](Int) { return Int{1}; };
    out.push_back(std::move(f));
    return out;
  }
  if (g == GroupType::C) {
    Family f{"top-fixed", {}, -1};
    f.fixed[n] = [=](Int d) { return -n + N * d; };
    out.push_back(std::move(f));
    return out;
  }
  Family even{"top-fixed-even", {}, 0};
  even.fixed[n] = [=](Int d) { return -n + N * d; };
  if (t1 == 1) {
    even.fixed[1] = [](Int) { return Int{1}; };
    out.push_back(even);
    Family odd{"top-fixed-odd", {}, 1};
    odd.fixed[n] = even.fixed[n];
    odd.fixed[1] = [=](Int) { return -1 + N; };
    out.push_back(std::move(odd));
  } else {
    const int j = t1;
    out.push_back(even);
    Family plus{"shifted-pair-plus", {}, 0};
    plus.fixed[n] = even.fixed[n];
    plus.fixed[1] = [=](Int) { return j + N; };
    plus.fixed[j] = [=](Int) { return 1 - N; };
    out.push_back(std::move(plus));
    Family minus{"shifted-pair-minus", {}, 0};
    minus.fixed[n] = even.fixed[n];
    minus.fixed[1] = [=](Int) { return -j + N; };
    minus.fixed[j] = [=](Int) { return -1 + N; };
    out.push_back(std::move(minus));
  }
  return out;
}

}  // namespace

std::vector<CosetRepresentative> involutive_reps(int n, int k, GroupType g, int d_bound) {
  check_nk(n, k);
  if (d_bound < 0) throw InvalidArgument("d_bound must be non-negative");
  std::vector<CosetRepresentative> out;
  const auto id = AffinePermutation::identity(n);
  for (const auto& tau : transversal_T(n, k)) {
    for (const auto& fam : families(n, tau, g)) {
      // sign slots: free singletons i > k, then unfixed pairs
      std::vector<int> free;
      std::vector<std::pair<int, int>> pairs;
      for (int i = k + 1; i <= n; ++i)
        if (!fam.fixed.count(i) && tau(i) == i) free.push_back(i);
      for (auto p : tau.pairs)
        if (!fam.fixed.count(p.first) && !fam.fixed.count(p.second)) pairs.push_back(p);
      const std::size_t slots = free.size() + pairs.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
        std::vector<int> signs(slots);
        for (std::size_t s = 0; s < slots; ++s) signs[s] = (mask >> (slots - 1 - s)) & 1 ? -1 : 1;
        for (Int d = -d_bound; d <= d_bound; ++d) {
          if (fam.d_parity >= 0 && ((d % 2) + 2) % 2 != fam.d_parity) continue;
          std::vector<Int> w(static_cast<std::size_t>(n));
          for (int i = 1; i <= k; ++i)
            if (tau(i) == i) w[static_cast<std::size_t>(i - 1)] = i;
          for (std::size_t s = 0; s < free.size(); ++s)
            w[static_cast<std::size_t>(free[s] - 1)] = signs[s] * free[s];
          for (std::size_t s = 0; s < pairs.size(); ++s) {
            int sg = signs[free.size() + s];
            auto [i, j] = pairs[s];
            w[static_cast<std::size_t>(i - 1)] = sg * j;
            w[static_cast<std::size_t>(j - 1)] = sg * i;
          }
          for (const auto& [idx, f] : fam.fixed) w[static_cast<std::size_t>(idx - 1)] = f(d);
          AffinePermutation sigma(n, std::move(w));
          if (sigma * sigma != id) throw std::logic_error("representative is not an involution: " + to_string(sigma));
          if (g == GroupType::B && !is_in_B_subgroup(sigma))
            throw std::logic_error("type-B representative has odd parity: " + to_string(sigma));
          out.push_back({g, n, k, tau, fam.name, signs, d, std::move(sigma)});
        }
      }
    }
  }
  return out;
}

namespace {

std::unordered_set<OmegaState, OmegaStateHash> g1_orbit_mod2(int n, int k) {
  const auto words = B_subgroup_generator_words(n);
  std::unordered_set<OmegaState, OmegaStateHash> seen{omega_base(n, k, 2)};
  std::vector<OmegaState> frontier{omega_base(n, k, 2)};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& w : words) {
      auto y = rho_word(w, x);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

}  // namespace

CosetReport coset_map_check(int n, int k, GroupType g, int d_bound, int margin) {
  CosetReport rep;
  rep.n = n;
  rep.k = k;
  rep.group = g;
  rep.d_bound = d_bound;
  rep.margin = margin;
  const auto reps = involutive_reps(n, k, g, d_bound);
  rep.representatives = reps.size();

  std::map<OmegaState, std::size_t> image;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    auto cls = signed_class(r_k(reps[r].realized, k)).representative;
    auto [it, fresh] = image.emplace(cls, r);
    if (!fresh) rep.collisions.push_back({it->second, r, cls});
  }
  rep.injective = rep.collisions.empty();

  std::unordered_set<OmegaState, OmegaStateHash> g1;
  if (g == GroupType::B) g1 = g1_orbit_mod2(n, k);
  const Int bmax = d_bound - margin;
  std::set<OmegaState> targets;
  for (const auto& x : enumerate_orbit(n, k, 1)) {
    for (Int b = -bmax; b <= bmax; ++b) {
      OmegaState y(x.trits, b);
      if (g == GroupType::B && !g1.count(reduce(y, 2))) continue;
      targets.insert(signed_class(y).representative);
    }
  }
  rep.targets = targets.size();
  for (const auto& t : targets)
    if (!image.count(t)) rep.gaps.push_back(t);
  rep.covering = rep.gaps.empty();
  return rep;
}

}  // namespace afflip
