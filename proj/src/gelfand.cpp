#include "afflip/gelfand.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "afflip/arc.hpp"
#include "afflip/geometric.hpp"

namespace afflip {

void validate_action(const FiniteAction& a) {
  const std::size_t N = a.size();
  if (N == 0) throw InvalidArgument("empty state set");
  if (a.generators.empty()) throw InvalidArgument("action has no generators");
  for (const auto& g : a.generators) {
    if (g.size() != N) throw InvalidArgument("generator has wrong length");
    std::vector<bool> hit(N, false);
    for (auto y : g) {
      if (y >= N || hit[y]) throw InvalidArgument("generator is not a bijection");
      hit[y] = true;
    }
  }
}

namespace {

using Step = std::function<std::size_t(int, std::size_t)>;

// Index maps for the Coxeter generators, then the type-B reduction.
FiniteAction assemble(std::vector<std::string> labels, int n, const Step& step, GroupType group) {
  FiniteAction a;
  a.labels = std::move(labels);
  const std::size_t N = a.labels.size();
  std::vector<std::vector<std::uint32_t>> s(static_cast<std::size_t>(n) + 1, std::vector<std::uint32_t>(N));
  for (int i = 0; i <= n; ++i)
    for (std::size_t x = 0; x < N; ++x) s[static_cast<std::size_t>(i)][x] = static_cast<std::uint32_t>(step(i, x));
  if (group == GroupType::C) {
    a.generators = std::move(s);
    for (int i = 0; i <= n; ++i) a.generator_names.push_back("s" + std::to_string(i));
  } else {
    for (int i = 0; i < n; ++i) {
      a.generators.push_back(s[static_cast<std::size_t>(i)]);
      a.generator_names.push_back("s" + std::to_string(i));
    }
    const auto& sn = s[static_cast<std::size_t>(n)];
    const auto& sm = s[static_cast<std::size_t>(n - 1)];
    std::vector<std::uint32_t> t(N);
    for (std::size_t x = 0; x < N; ++x) t[x] = sn[sm[sn[x]]];
    a.generators.push_back(std::move(t));
    a.generator_names.push_back("s" + std::to_string(n) + "s" + std::to_string(n - 1) + "s" + std::to_string(n));
  }
  validate_action(a);
  return a;
}

template <class T>
std::map<T, std::size_t> index_of(const std::vector<T>& xs) {
  std::map<T, std::size_t> idx;
  for (std::size_t i = 0; i < xs.size(); ++i) idx.emplace(xs[i], i);
  return idx;
}

template <class T, class F>
std::vector<std::uint32_t> index_map(const std::vector<T>& xs, const std::map<T, std::size_t>& idx, F f) {
  std::vector<std::uint32_t> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = static_cast<std::uint32_t>(idx.at(f(xs[i])));
  return out;
}

void check_spec(const ActionSpec& s) {
  if (s.n < 2) throw InvalidArgument("n must be at least 2");
  if (s.model == "omega" || s.model == "omega_signed") {
    if (s.k < 0 || s.k > s.n - 1) throw InvalidArgument("k must satisfy 0 <= k <= n-1");
    if (s.m < 1) throw InvalidArgument("omega model needs m >= 1");
  } else if (s.model == "arc") {
    if (s.k < 0 || s.k > s.n - 1) throw InvalidArgument("k must satisfy 0 <= k <= n-1");
  } else if (s.model == "ctft" || s.model == "lf" || s.model == "gc") {
    if (s.k != 0) throw InvalidArgument("model " + s.model + " only has k = 0");
  } else {
    throw InvalidArgument("unknown model: " + s.model);
  }
}

}  // namespace

std::uint64_t model_size_formula(const ActionSpec& spec) {
  check_spec(spec);
  const int n = spec.n;
  if (spec.model == "omega" || spec.model == "omega_signed") return orbit_size_formula(n, spec.k, spec.m);
  if (spec.model == "arc") return orbit_size_formula(n, spec.k, n + 2);
  if (spec.model == "ctft") return orbit_size_formula(n, 0, n + 4);
  return orbit_size_formula(n, 0, n + 3);
}

FiniteAction build_action(const ActionSpec& spec) {
  check_spec(spec);
  const int n = spec.n;
  const int k = spec.k;
  const bool quotient = spec.signed_quotient || spec.model == "omega_signed";
  FiniteAction a;
  std::vector<std::uint32_t> inv;

  if (spec.model == "omega" || spec.model == "omega_signed") {
    auto xs = enumerate_orbit(n, k, spec.m);
    auto idx = index_of(xs);
    std::vector<std::string> labels;
    for (const auto& x : xs) labels.push_back(to_string(x));
    a = assemble(std::move(labels), n, [&](int i, std::size_t x) { return idx.at(rho_generator(i, xs[x])); },
                 spec.group);
    a.base = idx.at(omega_base(n, k, spec.m));
    if (quotient) inv = index_map(xs, idx, [](const OmegaState& x) { return negate(x); });
  } else if (spec.model == "arc") {
    auto xs = enumerate_arc(n + 2, n - k);
    auto idx = index_of(xs);
    std::vector<std::string> labels;
    for (const auto& x : xs) labels.push_back(to_string(x));
    a = assemble(std::move(labels), n, [&](int i, std::size_t x) { return idx.at(rho_A(i, xs[x])); }, spec.group);
    a.base = idx.at(phi_arc_inv(omega_base(n, k, n + 2)));
    if (quotient) inv = index_map(xs, idx, [](const PartialArcPermutation& p) { return iota_arc(p); });
  } else if (spec.model == "ctft") {
    auto xs = enumerate_ctft(n + 4);
    auto idx = index_of(xs);
    std::vector<std::string> labels;
    for (const auto& x : xs) labels.push_back(to_string(x));
    a = assemble(std::move(labels), n, [&](int i, std::size_t x) { return idx.at(flip_ctft(i, xs[x])); }, spec.group);
    a.base = idx.at(phi_tft_inv(omega_base(n, 0, n + 4)));
    if (quotient) inv = index_map(xs, idx, [](const DiagonalSequence& t) { return iota_tft(t); });
  } else if (spec.model == "lf") {
    auto xs = enumerate_lf(n + 3);
    auto idx = index_of(xs);
    std::vector<std::string> labels;
    for (const auto& x : xs) labels.push_back(to_string(x));
    a = assemble(std::move(labels), n, [&](int i, std::size_t x) { return idx.at(rho_LF(n - i, xs[x])); },
                 spec.group);
    a.base = idx.at(phi_lf_inv(omega_base(n, 0, n + 3)));
    if (quotient) inv = index_map(xs, idx, [](const Factorization& w) { return iota_lf(w); });
  } else {
    auto xs = enumerate_gc(n + 3);
    auto idx = index_of(xs);
    std::map<Factorization, std::size_t> by_psi;
    for (std::size_t i = 0; i < xs.size(); ++i) by_psi.emplace(psi(xs[i]), i);
    std::vector<std::string> labels;
    for (const auto& x : xs) labels.push_back(to_string(x));
    a = assemble(std::move(labels), n, [&](int i, std::size_t x) { return idx.at(flip_gc(n - i, xs[x])); },
                 spec.group);
    a.base = by_psi.at(phi_lf_inv(omega_base(n, 0, n + 3)));
    if (quotient)
      inv = index_map(xs, idx, [&](const Caterpillar& g) { return xs[by_psi.at(iota_lf(psi(g)))]; });
  }
  if (quotient) a = quotient_by_involution(a, inv);
  return a;
}

FiniteAction quotient_by_involution(const FiniteAction& a, const std::vector<std::uint32_t>& inv) {
  const std::size_t N = a.size();
  if (inv.size() != N) throw InvalidArgument("involution has wrong length");
  for (std::size_t x = 0; x < N; ++x) {
    if (inv[x] >= N || inv[inv[x]] != x) throw InvalidArgument("map is not an involution");
    for (const auto& g : a.generators)
      if (g[inv[x]] != inv[g[x]]) throw InvalidArgument("involution does not commute with the action");
  }
  std::vector<std::uint32_t> cls(N);
  std::vector<std::size_t> reps;
  std::vector<std::uint32_t> id_of(N, 0);
  for (std::size_t x = 0; x < N; ++x) {
    if (inv[x] < x) continue;
    id_of[x] = id_of[inv[x]] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  FiniteAction q;
  q.generator_names = a.generator_names;
  for (auto r : reps) q.labels.push_back(a.labels[r]);
  for (const auto& g : a.generators) {
    std::vector<std::uint32_t> h(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) h[c] = id_of[g[reps[c]]];
    q.generators.push_back(std::move(h));
  }
  if (a.base) q.base = id_of[*a.base];
  validate_action(q);
  return q;
}

std::vector<std::size_t> orbit_of(const FiniteAction& a, std::size_t start) {
  if (start >= a.size()) throw InvalidArgument("start point out of range");
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> order{start};
  seen[start] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (const auto& g : a.generators) {
      auto y = g[order[h]];
      if (!seen[y]) {
        seen[y] = true;
        order.push_back(y);
      }
    }
  std::sort(order.begin(), order.end());
  return order;
}

FiniteAction restrict_to_orbit(const FiniteAction& a, std::size_t start) {
  auto orb = orbit_of(a, start);
  std::vector<std::uint32_t> pos(a.size(), 0);
  for (std::size_t i = 0; i < orb.size(); ++i) pos[orb[i]] = static_cast<std::uint32_t>(i);
  FiniteAction r;
  r.generator_names = a.generator_names;
  for (auto x : orb) r.labels.push_back(a.labels[x]);
  for (const auto& g : a.generators) {
    std::vector<std::uint32_t> h(orb.size());
    for (std::size_t i = 0; i < orb.size(); ++i) h[i] = pos[g[orb[i]]];
    r.generators.push_back(std::move(h));
  }
  r.base = pos[start];
  return r;
}

OrbitalDecomposition orbitals(const FiniteAction& a) {
  validate_action(a);
  const std::size_t N = a.size();
  constexpr std::uint32_t none = ~std::uint32_t{0};
  OrbitalDecomposition d;
  d.points = N;
  d.orbital.assign(N * N, none);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < N * N; ++s) {
    if (d.orbital[s] != none) continue;
    const std::uint32_t id = d.rank++;
    d.first_pair.push_back(s);
    d.sizes.push_back(0);
    d.orbital[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      ++d.sizes[id];
      const std::size_t x = p / N, y = p % N;
      for (const auto& g : a.generators) {
        auto q = static_cast<std::size_t>(g[x]) * N + g[y];
        if (d.orbital[q] == none) {
          d.orbital[q] = id;
          stack.push_back(q);
        }
      }
    }
  }
  d.pairing.resize(d.rank);
  for (std::uint32_t i = 0; i < d.rank; ++i) {
    auto p = d.first_pair[i];
    d.pairing[i] = d.of(p % N, p / N);
  }
  return d;
}

namespace {

using Counts = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (i * r + j, p)

Counts structure_row(const OrbitalDecomposition& d, std::size_t x, std::size_t z) {
  const std::size_t N = d.points;
  Counts c;
  c.reserve(N);
  for (std::size_t y = 0; y < N; ++y) c.emplace_back(static_cast<std::uint64_t>(d.of(x, y)) * d.rank + d.of(y, z), 1);
  std::sort(c.begin(), c.end());
  Counts merged;
  for (const auto& e : c) {
    if (!merged.empty() && merged.back().first == e.first)
      ++merged.back().second;
    else
      merged.push_back(e);
  }
  return merged;
}

std::uint64_t lookup(const Counts& c, std::uint64_t key) {
  auto it = std::lower_bound(c.begin(), c.end(), std::pair<std::uint64_t, std::uint64_t>{key, 0});
  return it != c.end() && it->first == key ? it->second : 0;
}

struct RowVerdict {
  bool consistent = true;
  bool commutative = true;
  std::uint32_t i = 0, j = 0;
  std::uint64_t pij = 0, pji = 0;
};

RowVerdict check_orbital(const OrbitalDecomposition& d, std::uint32_t k, std::size_t second) {
  const std::size_t N = d.points;
  RowVerdict v;
  auto p = d.first_pair[k];
  auto row = structure_row(d, p / N, p % N);
  if (second != p && structure_row(d, second / N, second % N) != row) v.consistent = false;
  for (const auto& [key, cnt] : row) {
    auto i = static_cast<std::uint32_t>(key / d.rank), j = static_cast<std::uint32_t>(key % d.rank);
    auto other = lookup(row, static_cast<std::uint64_t>(j) * d.rank + i);
    if (other != cnt) {
      v.commutative = false;
      v.i = i;
      v.j = j;
      v.pij = cnt;
      v.pji = other;
      break;
    }
  }
  return v;
}

unsigned thread_count() {
  if (const char* env = std::getenv("AFFLIP_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return static_cast<unsigned>(t);
  }
  return 1;
}

}  // namespace

GelfandCertificate structure_constants_commute(const FiniteAction& a, const OrbitalDecomposition& d) {
  const std::size_t N = d.points;
  GelfandCertificate c;
  c.states = N;
  c.rank = d.rank;
  c.transitive = orbit_of(a, 0).size() == N;
  for (std::uint32_t i = 0; i < d.rank; ++i)
    if (d.pairing[i] == i) ++c.self_paired_count;
  c.self_paired = c.self_paired_count == d.rank;

  // a second representative: the largest pair index in each orbital
  std::vector<std::size_t> last(d.rank, 0);
  for (std::size_t p = 0; p < N * N; ++p) last[d.orbital[p]] = p;

  std::vector<RowVerdict> verdicts(d.rank);
  const unsigned T = std::min<unsigned>(thread_count(), std::max<std::uint32_t>(d.rank, 1));
  auto work = [&](unsigned t) {
    for (std::uint32_t k = t; k < d.rank; k += T) verdicts[k] = check_orbital(d, k, last[k]);
  };
  if (T <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  c.commutative = true;
  for (std::uint32_t k = 0; k < d.rank; ++k) {
    if (!verdicts[k].consistent) throw std::logic_error("structure constants depend on the representative pair");
    if (c.commutative && !verdicts[k].commutative) {
      c.commutative = false;
      c.witness = std::array<std::uint32_t, 3>{verdicts[k].i, verdicts[k].j, k};
      c.witness_pij = verdicts[k].pij;
      c.witness_pji = verdicts[k].pji;
    }
  }
  if (c.self_paired && !c.commutative) throw std::logic_error("self-paired orbitals but non-commutative algebra");
  c.multiplicity_free = c.commutative;
  if (a.base) {
    std::map<std::uint32_t, std::uint64_t> sub;
    for (std::size_t y = 0; y < N; ++y) ++sub[d.of(*a.base, y)];
    for (auto [o, s] : sub) c.suborbit_sizes.push_back(s);
  }
  return c;
}

GelfandCertificate certify(const FiniteAction& a) { return structure_constants_commute(a, orbitals(a)); }

CosetInvolutionReport coset_involution_check(const FiniteAction& a, std::size_t base) {
  if (base >= a.size()) throw InvalidArgument("base point not in the action");
  auto d = orbitals(a);
  std::map<std::uint32_t, std::uint64_t> sub;
  for (std::size_t y = 0; y < a.size(); ++y) ++sub[d.of(base, y)];
  CosetInvolutionReport r;
  r.all_self_paired = true;
  for (auto [o, s] : sub) {
    bool sp = d.pairing[o] == o;
    r.suborbits.push_back({o, s, sp});
    r.all_self_paired = r.all_self_paired && sp;
  }
  return r;
}

BSubgroupReport b_subgroup_action_check(int n, int k, Int m) {
  ActionSpec spec{"omega_signed", n, k, m, GroupType::C, true};
  auto full = build_action(spec);
  spec.group = GroupType::B;
  auto sub = build_action(spec);
  BSubgroupReport r;
  r.full_orbit = orbit_of(full, *full.base).size();
  auto restricted = restrict_to_orbit(sub, *sub.base);
  r.subgroup_orbit = restricted.size();
  r.certificate = certify(restricted);
  return r;
}

bool orbitals_correspond(const OrbitalDecomposition& a, const OrbitalDecomposition& b,
                         const std::vector<std::size_t>& map) {
  const std::size_t N = a.points;
  if (b.points != N || map.size() != N || a.rank != b.rank) return false;
  std::vector<bool> hit(N, false);
  for (auto y : map) {
    if (y >= N || hit[y]) return false;
    hit[y] = true;
  }
  constexpr std::uint32_t none = ~std::uint32_t{0};
  std::vector<std::uint32_t> fwd(a.rank, none), bwd(b.rank, none);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      auto oa = a.of(x, y), ob = b.of(map[x], map[y]);
      if (fwd[oa] == none && bwd[ob] == none) {
        fwd[oa] = ob;
        bwd[ob] = oa;
      } else if (fwd[oa] != ob || bwd[ob] != oa) {
        return false;
      }
    }
  for (std::uint32_t i = 0; i < a.rank; ++i)
    if (fwd[a.pairing[i]] != b.pairing[fwd[i]]) return false;
  return true;
}

}  // namespace afflip
