#include "afflip/flip_action.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace afflip {

namespace {

Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

OmegaState::OmegaState(std::vector<std::int8_t> a, Int b_, Int m) : trits(std::move(a)), b(b_), modulus(m) {
  if (m < 0) throw InvalidArgument("modulus must be non-negative");
  for (auto t : trits)
    if (t < -1 || t > 1) throw InvalidArgument("trits must lie in {-1,0,1}");
  if (modulus > 0) b = mod(b, modulus);
}

int OmegaState::zero_count() const {
  return static_cast<int>(std::count(trits.begin(), trits.end(), std::int8_t{0}));
}

bool operator<(const OmegaState& x, const OmegaState& y) {
  if (x.trits != y.trits) return x.trits < y.trits;
  return x.b < y.b;
}

std::uint64_t encode(const OmegaState& x) {
  std::uint64_t key = 0;
  for (auto t : x.trits) key = key * 3 + static_cast<std::uint64_t>(t + 1);
  key = (key << 24) ^ (static_cast<std::uint64_t>(x.b) & 0xFFFFFFu);
  return key;
}

std::size_t OmegaStateHash::operator()(const OmegaState& x) const {
  std::uint64_t h = encode(x) ^ (static_cast<std::uint64_t>(x.b) * 0x9E3779B97F4A7C15ull);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

OmegaState rho_generator(int i, const OmegaState& x) {
  const int n = x.rank();
  if (i < 0 || i > n) throw InvalidArgument("generator index out of range");
  OmegaState y = x;
  if (i == 0) {
    y.trits[0] = static_cast<std::int8_t>(-y.trits[0]);
  } else if (i < n) {
    std::swap(y.trits[static_cast<std::size_t>(i - 1)], y.trits[static_cast<std::size_t>(i)]);
  } else {
    auto& last = y.trits[static_cast<std::size_t>(n - 1)];
    y.b = checked_add(y.b, last);
    if (y.modulus > 0) y.b = mod(y.b, y.modulus);
    last = static_cast<std::int8_t>(-last);
  }
  return y;
}

OmegaState rho_word(const GeneratorWord& w, const OmegaState& x) {
  if (w.rank != x.rank()) throw InvalidArgument("rank mismatch between word and state");
  OmegaState y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = rho_generator(*it, y);
  return y;
}

OmegaState negate(const OmegaState& x) {
  std::vector<std::int8_t> a(x.trits.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::int8_t>(-x.trits[i]);
  return OmegaState(std::move(a), -x.b, x.modulus);
}

OmegaState reduce(const OmegaState& x, Int m) {
  if (m <= 0) throw InvalidArgument("reduction modulus must be positive");
  return OmegaState(x.trits, x.b, m);
}

int epsilon(int n, int k, Int t) {
  if (k < 0 || k > n - 1) throw InvalidArgument("k out of range for epsilon");
  Int a = residue(n, t);
  if (a == 0 || (a < 0 ? -a : a) <= k) return 0;
  return a > 0 ? 1 : -1;
}

Int P_k(const AffinePermutation& u, int k) {
  const int n = u.rank();
  auto ui = inverse(u);
  Int s = 0;
  for (int j = 1; j <= n; ++j) s = checked_add(s, epsilon(n, k, j) * static_cast<Int>(j));
  for (int j = 1; j <= n; ++j) {
    Int x = ui[j];
    s = checked_add(s, -checked_mul(epsilon(n, k, x), x));
  }
  if (s % period(n) != 0) throw std::logic_error("P_k: sum not divisible by 2n+1");
  return s / period(n);
}

OmegaState r_k(const AffinePermutation& u, int k, Int modulus) {
  const int n = u.rank();
  auto ui = inverse(u);
  std::vector<std::int8_t> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) a[static_cast<std::size_t>(j - 1)] = static_cast<std::int8_t>(epsilon(n, k, ui[j]));
  return OmegaState(std::move(a), P_k(u, k), modulus);
}

OmegaState omega_base(int n, int k, Int modulus) {
  if (n < 1 || k < 0 || k > n) throw InvalidArgument("omega_k requires 0 <= k <= n");
  std::vector<std::int8_t> a(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = 0;
  return OmegaState(std::move(a), 0, modulus);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t orbit_size_formula(int n, int k, Int m) {
  return binomial(n, k) * (std::uint64_t{1} << (n - k)) * static_cast<std::uint64_t>(m);
}

std::vector<OmegaState> enumerate_orbit(int n, int k, Int m) {
  if (n < 1 || k < 0 || k > n) throw InvalidArgument("enumerate_orbit requires 0 <= k <= n");
  if (m < 1) throw InvalidArgument("enumerate_orbit requires m >= 1");
  std::vector<OmegaState> out;
  std::vector<std::int8_t> a(static_cast<std::size_t>(n), -1);
  // odometer over {-1,0,1}^n in lexicographic order
  while (true) {
    if (std::count(a.begin(), a.end(), std::int8_t{0}) == k)
      for (Int b = 0; b < m; ++b) out.emplace_back(a, b, m);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == 1) a[static_cast<std::size_t>(i--)] = -1;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

SignedClass signed_class(const OmegaState& x) {
  OmegaState y = negate(x);
  if (y == x) return {x, true};
  return {y < x ? y : x, false};
}

std::vector<SignedClass> signed_quotient(const std::vector<OmegaState>& states) {
  std::unordered_set<OmegaState, OmegaStateHash> all(states.begin(), states.end());
  std::vector<SignedClass> out;
  std::unordered_set<OmegaState, OmegaStateHash> emitted;
  for (const auto& x : states) {
    if (!all.count(negate(x))) throw InvalidArgument("state set is not closed under negation: " + to_string(x));
    auto c = signed_class(x);
    if (emitted.insert(c.representative).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const SignedClass& p, const SignedClass& q) { return p.representative < q.representative; });
  return out;
}

TransitivityReport bfs_orbit(const OmegaState& start, std::size_t cap) {
  const int n = start.rank();
  TransitivityReport rep;
  std::unordered_map<OmegaState, std::size_t, OmegaStateHash> index;
  rep.states.push_back(start);
  rep.witness.emplace_back(n, std::vector<int>{});
  rep.depth.push_back(0);
  index.emplace(start, 0);
  for (std::size_t head = 0; head < rep.states.size(); ++head) {
    for (int i = 0; i <= n; ++i) {
      OmegaState y = rho_generator(i, rep.states[head]);
      if (index.count(y)) continue;
      if (rep.states.size() >= cap) throw std::length_error("orbit exceeds node cap");
      index.emplace(y, rep.states.size());
      GeneratorWord w(n, {i});
      const auto& prev = rep.witness[head].letters;
      w.letters.insert(w.letters.end(), prev.begin(), prev.end());
      rep.witness.push_back(std::move(w));
      rep.depth.push_back(rep.depth[head] + 1);
      rep.states.push_back(std::move(y));
    }
  }
  rep.reached = rep.states.size();
  return rep;
}

TransitivityReport transitivity_check(int n, int k, Int m) {
  auto all = enumerate_orbit(n, k, m);
  auto rep = bfs_orbit(omega_base(n, k, m));
  rep.expected = all.size();
  if (rep.reached == rep.expected) {
    auto sorted = rep.states;
    std::sort(sorted.begin(), sorted.end());
    rep.transitive = (sorted == all);
  }
  return rep;
}

std::string to_string(const OmegaState& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.trits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<int>(x.trits[i]));
  }
  return s + ";" + std::to_string(x.b) + ")";
}

OmegaState parse_state(std::string_view text, Int modulus) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw InvalidArgument("state must look like (1,-1,0;3)");
  auto semi = s.find(';');
  if (semi == std::string::npos) throw InvalidArgument("state is missing ';b'");
  auto parse = [](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    Int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw InvalidArgument("bad number in state");
    return v;
  };
  std::vector<std::int8_t> a;
  std::string_view body = std::string_view(s).substr(1, semi - 1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      Int v = parse(body.substr(start, i - start));
      if (v < -1 || v > 1) throw InvalidArgument("trits must lie in {-1,0,1}");
      a.push_back(static_cast<std::int8_t>(v));
      start = i + 1;
    }
  }
  Int b = parse(std::string_view(s).substr(semi + 1, s.size() - semi - 2));
  return OmegaState(std::move(a), b, modulus);
}

}  // namespace afflip
