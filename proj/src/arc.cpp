#include "afflip/arc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace afflip {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

// Representative in [1, m].
int val(int x, int m) {
  int r = mod(x, m);
  return r == 0 ? m : r;
}

bool contains_mod(const std::vector<int>& entries, std::size_t from, int v, int m) {
  for (std::size_t j = from; j < entries.size(); ++j)
    if (entries[j] != 0 && mod(entries[j], m) == mod(v, m)) return true;
  return false;
}

std::optional<std::size_t> first_interior(const std::vector<int>& e) {
  for (std::size_t i = 1; i + 1 < e.size(); ++i)
    if (e[i] != 0) return i;
  return std::nullopt;
}

// Value forced on pi(1) by rule (iv), if the first interior entry has a
// neighbour later on.
std::optional<int> required_first(const std::vector<int>& e, int k) {
  const int m = static_cast<int>(e.size());
  auto i0 = first_interior(e);
  std::size_t idx = i0 ? *i0 : e.size() - 1;
  int v = e[idx];
  if (contains_mod(e, idx + 1, v - 1, m)) return val(v - k - 1, m);
  if (contains_mod(e, idx + 1, v + 1, m)) return val(v + k + 1, m);
  return std::nullopt;
}

}  // namespace

int PartialArcPermutation::k() const {
  int c = 0;
  for (std::size_t i = 1; i + 1 < entries.size(); ++i)
    if (entries[i] != 0) ++c;
  return c;
}

bool is_cyclic_interval(const std::vector<int>& values, int m) {
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  std::size_t size = 0;
  for (int x : values) {
    auto r = static_cast<std::size_t>(mod(x, m));
    if (!in[r]) ++size;
    in[r] = true;
  }
  if (size == 0 || size == static_cast<std::size_t>(m)) return true;
  int ends = 0;
  for (int r = 0; r < m; ++r)
    if (in[static_cast<std::size_t>(r)] && !in[static_cast<std::size_t>((r + 1) % m)]) ++ends;
  return ends == 1;
}

bool is_partial_arc(const std::vector<int>& e, int m, int k) {
  if (m < 3 || static_cast<int>(e.size()) != m) return false;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int x : e) {
    if (x == 0) continue;
    if (x < 1 || x > m || used[static_cast<std::size_t>(x)]) return false;
    used[static_cast<std::size_t>(x)] = true;
  }
  if (e.front() == 0 || e.back() == 0) return false;
  if (PartialArcPermutation{e}.k() != k) return false;
  std::vector<int> suffix;
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] != 0) suffix.push_back(e[i]);
    if (!is_cyclic_interval(suffix, m)) return false;
  }
  auto want = required_first(e, k);
  return want && *want == e.front();
}

bool is_partial_arc(const PartialArcPermutation& p) { return is_partial_arc(p.entries, p.m(), p.k()); }

namespace {

void require_valid(const PartialArcPermutation& p) {
  if (!is_partial_arc(p)) throw InvalidArgument("not a partial arc permutation: " + to_string(p));
}

void require_index(int i, const PartialArcPermutation& p) {
  if (i < 0 || i > p.m() - 2) throw InvalidArgument("generator index out of range");
}

}  // namespace

PartialArcPermutation swap_if_partial_arc(int i, const PartialArcPermutation& p) {
  require_valid(p);
  require_index(i, p);
  auto q = p;
  std::swap(q.entries[static_cast<std::size_t>(i)], q.entries[static_cast<std::size_t>(i + 1)]);
  return is_partial_arc(q.entries, p.m(), p.k()) ? q : p;
}

PartialArcPermutation rho_A(int i, const PartialArcPermutation& p) {
  require_valid(p);
  require_index(i, p);
  const int k = p.k();
  auto q = p;
  std::swap(q.entries[static_cast<std::size_t>(i)], q.entries[static_cast<std::size_t>(i + 1)]);
  if (is_partial_arc(q.entries, p.m(), k)) return q;
  if (i >= 1 && q.entries.front() != 0 && q.entries.back() != 0) {
    if (auto want = required_first(q.entries, k)) {
      auto r = q;
      r.entries.front() = *want;
      if (is_partial_arc(r.entries, p.m(), k)) return r;
    }
  }
  return p;
}

PartialArcPermutation iota_arc(const PartialArcPermutation& p) {
  require_valid(p);
  const int m = p.m();
  auto q = p;
  for (auto& x : q.entries)
    if (x != 0 && x != m) x = m - x;
  return q;
}

OmegaState phi_arc(const PartialArcPermutation& p) {
  require_valid(p);
  const int m = p.m();
  const int n = m - 2;
  const auto& e = p.entries;
  std::vector<std::int8_t> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int x = e[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    if (contains_mod(e, static_cast<std::size_t>(i + 1), x - 1, m))
      a[static_cast<std::size_t>(i - 1)] = 1;
    else if (contains_mod(e, static_cast<std::size_t>(i + 1), x + 1, m))
      a[static_cast<std::size_t>(i - 1)] = -1;
    else
      throw std::logic_error("phi_arc: entry has no neighbour in its suffix");
  }
  return OmegaState(std::move(a), e.back(), m);
}

PartialArcPermutation phi_arc_inv(const OmegaState& x) {
  const int n = x.rank();
  const int m = n + 2;
  if (x.modulus != 0 && x.modulus != m) throw InvalidArgument("phi_arc_inv expects b modulo n+2");
  if (x.zero_count() == n) throw InvalidArgument("phi_arc_inv needs a nonzero trit");
  std::vector<int> A(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) A[static_cast<std::size_t>(j)] = x.trits[static_cast<std::size_t>(j - 1)];
  for (int j = 1; j <= n; ++j)
    if (A[static_cast<std::size_t>(j)] != 0) {
      A[0] = -A[static_cast<std::size_t>(j)];
      break;
    }
  const int b = static_cast<int>(mod(static_cast<int>(x.b % m), m));
  PartialArcPermutation p;
  p.entries.assign(static_cast<std::size_t>(m), 0);
  p.entries.back() = val(b, m);
  for (int i = 1; i <= n + 1; ++i) {
    int s = A[static_cast<std::size_t>(i - 1)];
    if (s == 0) continue;
    int sum = 0;
    for (int j = i - 1; j <= n; ++j)
      if (A[static_cast<std::size_t>(j)] == s) sum += s;
    p.entries[static_cast<std::size_t>(i - 1)] = val(b + sum, m);
  }
  require_valid(p);
  return p;
}

std::vector<PartialArcPermutation> enumerate_arc(int m, int k) {
  if (m < 3 || k < 1 || k > m - 2) throw InvalidArgument("enumerate_arc requires 1 <= k <= m-2");
  std::set<PartialArcPermutation> out;
  // interior positions, as a bitmask over 1..m-2
  std::vector<bool> pick(static_cast<std::size_t>(m - 2), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> pos{0};
    for (int i = 0; i < m - 2; ++i)
      if (pick[static_cast<std::size_t>(i)]) pos.push_back(i + 1);
    // every suffix is an interval: grow [lo, hi] from the last entry backwards
    for (int b = 1; b <= m; ++b) {
      for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e.back() = b;
        int lo = b, hi = b;
        for (int r = k; r >= 0; --r) {
          bool up = (mask >> r) & 1u;
          int v = up ? ++hi : --lo;
          e[static_cast<std::size_t>(pos[static_cast<std::size_t>(r)])] = val(v, m);
        }
        if (is_partial_arc(e, m, k)) out.insert(PartialArcPermutation{std::move(e)});
      }
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

std::string to_string(const PartialArcPermutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    if (i) s += ',';
    s += p.entries[i] == 0 ? std::string("_") : std::to_string(p.entries[i]);
  }
  return s + "]";
}

PartialArcPermutation parse_arc(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw InvalidArgument("arc permutation must be bracketed");
  PartialArcPermutation p;
  std::string_view body = std::string_view(s).substr(1, s.size() - 2);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      auto t = body.substr(start, i - start);
      if (t == "_" || t == "o") {
        p.entries.push_back(0);
      } else {
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v < 1)
          throw InvalidArgument("bad arc entry: '" + std::string(t) + "'");
        p.entries.push_back(v);
      }
      start = i + 1;
    }
  }
  return p;
}

}  // namespace afflip
