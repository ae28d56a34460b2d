#include "afflip/geometric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace afflip {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

int wrap(int v, int m) {
  int r = mod(v, m);
  return r == 0 ? m : r;
}

bool has_vertex(Chord e, int v) { return e.first == v || e.second == v; }

int other_end(Chord e, int v) { return e.first == v ? e.second : e.first; }

int shared_vertex_count(Chord e, Chord f) {
  int c = 0;
  if (has_vertex(f, e.first)) ++c;
  if (has_vertex(f, e.second)) ++c;
  return c;
}

bool pairwise_noncrossing(const std::vector<Chord>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (chords_cross(cs[i], cs[j])) return false;
  return true;
}

bool in_range(Chord e, int m) { return e.first >= 1 && e.second <= m && e.first < e.second; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Chord make_chord(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

bool chords_cross(Chord e, Chord f) {
  e = make_chord(e.first, e.second);
  f = make_chord(f.first, f.second);
  if (shared_vertex_count(e, f) > 0) return false;
  auto inside = [&](int x) { return e.first < x && x < e.second; };
  return inside(f.first) != inside(f.second);
}

bool is_proper_chord(Chord e, int m) {
  if (!in_range(e, m)) return false;
  int d = e.second - e.first;
  return d != 1 && d != m - 1;
}

bool is_short_chord(Chord e, int m) {
  int d = mod(e.second - e.first, m);
  return d == 2 || d == m - 2;
}

// ---------------------------------------------------------------------------
// CTFT

bool is_ctft(const DiagonalSequence& t) {
  const int m = t.m;
  if (m < 5 || static_cast<int>(t.diagonals.size()) != m - 3) return false;
  const auto& d = t.diagonals;
  for (auto e : d)
    if (e.first >= e.second || !is_proper_chord(e, m)) return false;
  std::set<Chord> distinct(d.begin(), d.end());
  if (distinct.size() != d.size()) return false;
  if (!pairwise_noncrossing(d)) return false;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (shared_vertex_count(d[i], d[i + 1]) == 0) return false;
  int shorts = 0;
  for (auto e : d) shorts += is_short_chord(e, m) ? 1 : 0;
  return is_short_chord(d.front(), m) && is_short_chord(d.back(), m) && shorts == 2;
}

namespace {

void require_ctft(const DiagonalSequence& t) {
  if (!is_ctft(t)) throw InvalidArgument("not a colored triangle-free triangulation: " + to_string(t));
}

// [lo, hi] with the given vertex set a cyclic interval.
std::pair<int, int> interval_ends(const std::set<int>& vs, int m) {
  int lo = 0, hi = 0, nlo = 0, nhi = 0;
  for (int v : vs) {
    if (!vs.count(wrap(v - 1, m))) lo = v, ++nlo;
    if (!vs.count(wrap(v + 1, m))) hi = v, ++nhi;
  }
  if (nlo != 1 || nhi != 1) throw std::logic_error("vertex set is not a proper cyclic interval");
  return {lo, hi};
}

}  // namespace

DiagonalSequence flip_ctft(int i, const DiagonalSequence& t) {
  require_ctft(t);
  const int m = t.m;
  if (i < 0 || i >= static_cast<int>(t.diagonals.size())) throw InvalidArgument("generator index out of range");
  std::set<Chord> edges(t.diagonals.begin(), t.diagonals.end());
  for (int v = 1; v <= m; ++v) edges.insert(make_chord(v, wrap(v + 1, m)));
  auto [p, q] = t.diagonals[static_cast<std::size_t>(i)];
  std::vector<int> apex;
  for (int r = 1; r <= m; ++r)
    if (r != p && r != q && edges.count(make_chord(p, r)) && edges.count(make_chord(q, r))) apex.push_back(r);
  if (apex.size() != 2) throw std::logic_error("diagonal does not bound exactly two triangles");
  auto s = t;
  s.diagonals[static_cast<std::size_t>(i)] = make_chord(apex[0], apex[1]);
  return is_ctft(s) ? s : t;
}

OmegaState phi_tft(const DiagonalSequence& t) {
  require_ctft(t);
  const int m = t.m;
  const int n = m - 4;
  auto [p, q] = t.diagonals.back();
  const int b = wrap(p + 2, m) == q ? wrap(p + 1, m) : wrap(q + 1, m);
  std::set<int> verts{b};
  std::vector<std::int8_t> a(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    auto d = t.diagonals[static_cast<std::size_t>(i)];
    verts.insert(d.first);
    verts.insert(d.second);
    auto [lo, hi] = interval_ends(verts, m);
    auto prev = t.diagonals[static_cast<std::size_t>(i - 1)];
    if (prev == make_chord(lo, wrap(hi + 1, m)))
      a[static_cast<std::size_t>(i - 1)] = 1;
    else if (prev == make_chord(wrap(lo - 1, m), hi))
      a[static_cast<std::size_t>(i - 1)] = -1;
    else
      throw std::logic_error("phi_tft: diagonal does not extend the interval");
  }
  return OmegaState(std::move(a), b, m);
}

DiagonalSequence phi_tft_inv(const OmegaState& x) {
  const int n = x.rank();
  const int m = n + 4;
  if (x.modulus != 0 && x.modulus != m) throw InvalidArgument("phi_tft_inv expects b modulo n+4");
  if (x.zero_count() != 0) throw InvalidArgument("phi_tft_inv expects nonzero trits");
  const int b = wrap(static_cast<int>(x.b % m), m);
  DiagonalSequence t{m, std::vector<Chord>(static_cast<std::size_t>(n) + 1)};
  int lo = wrap(b - 1, m), hi = wrap(b + 1, m);
  t.diagonals[static_cast<std::size_t>(n)] = make_chord(lo, hi);
  for (int i = n; i >= 1; --i) {
    if (x.trits[static_cast<std::size_t>(i - 1)] > 0)
      hi = wrap(hi + 1, m);
    else
      lo = wrap(lo - 1, m);
    t.diagonals[static_cast<std::size_t>(i - 1)] = make_chord(lo, hi);
  }
  require_ctft(t);
  return t;
}

DiagonalSequence iota_tft(const DiagonalSequence& t) { return phi_tft_inv(negate(phi_tft(t))); }

DiagonalSequence reflect_tft(const DiagonalSequence& t) {
  require_ctft(t);
  auto s = t;
  for (auto& d : s.diagonals) d = make_chord(wrap(t.m - d.first, t.m), wrap(t.m - d.second, t.m));
  return s;
}

std::vector<DiagonalSequence> enumerate_ctft(int m) {
  if (m < 5) throw InvalidArgument("CTFT needs m >= 5");
  std::set<DiagonalSequence> out;
  std::vector<Chord> seq;
  std::function<void(int, int)> grow = [&](int lo, int hi) {
    if (static_cast<int>(seq.size()) == m - 3) {
      DiagonalSequence t{m, seq};
      if (is_ctft(t)) out.insert(std::move(t));
      return;
    }
    for (auto [nlo, nhi] : {std::pair{lo, wrap(hi + 1, m)}, std::pair{wrap(lo - 1, m), hi}}) {
      seq.push_back(make_chord(nlo, nhi));
      grow(nlo, nhi);
      seq.pop_back();
    }
  };
  for (int c = 1; c <= m; ++c) {
    int lo = wrap(c - 1, m), hi = wrap(c + 1, m);
    seq = {make_chord(lo, hi)};
    grow(lo, hi);
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// LF

std::vector<int> product_permutation(const std::vector<Chord>& factors, int m) {
  std::vector<int> p(static_cast<std::size_t>(m) + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int x = 1; x <= m; ++x) {
    int y = x;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (y == it->first)
        y = it->second;
      else if (y == it->second)
        y = it->first;
    }
    p[static_cast<std::size_t>(x)] = y;
  }
  return p;
}

namespace {

bool is_long_cycle(const std::vector<Chord>& factors, int m) {
  auto p = product_permutation(factors, m);
  for (int x = 1; x <= m; ++x)
    if (p[static_cast<std::size_t>(x)] != wrap(x + 1, m)) return false;
  return true;
}

Chord conjugate(Chord g, Chord t) {
  auto f = [&](int y) { return y == g.first ? g.second : y == g.second ? g.first : y; };
  return make_chord(f(t.first), f(t.second));
}

void require_lf(const Factorization& w) {
  if (!is_lf(w)) throw InvalidArgument("not a linear factorization: " + to_string(w));
}

}  // namespace

bool is_lf(const Factorization& w) {
  const int m = w.m;
  if (m < 3 || static_cast<int>(w.factors.size()) != m - 1) return false;
  for (auto e : w.factors)
    if (!in_range(e, m)) return false;
  for (std::size_t i = 0; i + 1 < w.factors.size(); ++i)
    if (shared_vertex_count(w.factors[i], w.factors[i + 1]) != 1) return false;
  return is_long_cycle(w.factors, m);
}

Factorization hurwitz(int i, const Factorization& w) {
  if (i < 1 || i >= static_cast<int>(w.factors.size())) throw InvalidArgument("Hurwitz index out of range");
  auto r = w;
  auto g = w.factors[static_cast<std::size_t>(i - 1)], h = w.factors[static_cast<std::size_t>(i)];
  r.factors[static_cast<std::size_t>(i - 1)] = conjugate(g, h);
  r.factors[static_cast<std::size_t>(i)] = g;
  return r;
}

Factorization hurwitz_inv(int i, const Factorization& w) {
  if (i < 1 || i >= static_cast<int>(w.factors.size())) throw InvalidArgument("Hurwitz index out of range");
  auto r = w;
  auto g = w.factors[static_cast<std::size_t>(i - 1)], h = w.factors[static_cast<std::size_t>(i)];
  r.factors[static_cast<std::size_t>(i - 1)] = h;
  r.factors[static_cast<std::size_t>(i)] = conjugate(h, g);
  return r;
}

Factorization rho_LF(int i, const Factorization& w) {
  require_lf(w);
  if (i < 0 || i > w.m - 3) throw InvalidArgument("generator index out of range");
  auto fwd = hurwitz(i + 1, w);
  auto bwd = hurwitz_inv(i + 1, w);
  bool f = is_lf(fwd), b = is_lf(bwd);
  if (f && b) throw std::logic_error("both Hurwitz moves stay linear");
  return f ? fwd : b ? bwd : w;
}

namespace {

// (j, j+1) cyclically, including (1, m).
bool cyclically_adjacent(Chord t, int m) { return t.second == t.first + 1 || (t.first == 1 && t.second == m); }

}  // namespace

OmegaState phi_lf(const Factorization& w) {
  require_lf(w);
  const int m = w.m;
  const int n = m - 3;
  auto t1 = w.factors.front();
  if (!cyclically_adjacent(t1, m)) throw std::logic_error("first factor is not adjacent");
  const int j = t1.second == t1.first + 1 ? t1.first : t1.second;
  std::vector<std::int8_t> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    a[static_cast<std::size_t>(n - i)] = cyclically_adjacent(w.factors[static_cast<std::size_t>(i)], m) ? 1 : -1;
  return OmegaState(std::move(a), j, m);
}

Factorization phi_lf_inv(const OmegaState& x) {
  const int n = x.rank();
  const int m = n + 3;
  if (x.modulus != 0 && x.modulus != m) throw InvalidArgument("phi_lf_inv expects b modulo n+3");
  if (x.zero_count() != 0) throw InvalidArgument("phi_lf_inv expects nonzero trits");
  const int j = wrap(static_cast<int>(x.b % m), m);
  Factorization w{m, {make_chord(j, wrap(j + 1, m))}};
  int lo = j, hi = wrap(j + 1, m);
  for (int i = 1; i <= n; ++i) {
    if (x.trits[static_cast<std::size_t>(n - i)] > 0) {
      w.factors.push_back(make_chord(hi, wrap(hi + 1, m)));
      hi = wrap(hi + 1, m);
    } else {
      w.factors.push_back(make_chord(wrap(lo - 1, m), hi));
      lo = wrap(lo - 1, m);
    }
  }
  // closing factor (t_1 ... t_{n+1})^{-1} gamma
  auto p = product_permutation(w.factors, m);
  std::vector<int> inv(static_cast<std::size_t>(m) + 1);
  for (int y = 1; y <= m; ++y) inv[static_cast<std::size_t>(p[static_cast<std::size_t>(y)])] = y;
  std::vector<int> moved;
  for (int y = 1; y <= m; ++y)
    if (inv[static_cast<std::size_t>(wrap(y + 1, m))] != y) moved.push_back(y);
  if (moved.size() != 2) throw std::logic_error("closing factor is not a transposition");
  w.factors.push_back(make_chord(moved[0], moved[1]));
  require_lf(w);
  return w;
}

Factorization iota_lf(const Factorization& w) { return phi_lf_inv(negate(phi_lf(w))); }

std::vector<Factorization> enumerate_lf(int m) {
  if (m < 3) throw InvalidArgument("LF needs m >= 3");
  std::vector<Chord> all;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) all.emplace_back(a, b);
  std::vector<Factorization> out;
  std::vector<Chord> seq;
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == m - 1) {
      if (is_long_cycle(seq, m)) out.push_back({m, seq});
      return;
    }
    for (auto t : all) {
      if (!seq.empty() && shared_vertex_count(t, seq.back()) != 1) continue;
      // a tree never closes a cycle
      if (seen[static_cast<std::size_t>(t.first)] && seen[static_cast<std::size_t>(t.second)]) continue;
      seq.push_back(t);
      ++seen[static_cast<std::size_t>(t.first)];
      ++seen[static_cast<std::size_t>(t.second)];
      rec();
      --seen[static_cast<std::size_t>(t.first)];
      --seen[static_cast<std::size_t>(t.second)];
      seq.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// GC

Caterpillar make_caterpillar(int m, std::vector<Chord> edges) {
  for (auto& e : edges) e = make_chord(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return {m, std::move(edges)};
}

bool is_caterpillar(const Caterpillar& g) {
  const int m = g.m;
  if (m < 2 || static_cast<int>(g.edges.size()) != m - 1) return false;
  std::set<Chord> distinct;
  UnionFind uf(m);
  std::vector<int> deg(static_cast<std::size_t>(m) + 1, 0);
  for (auto e : g.edges) {
    e = make_chord(e.first, e.second);
    if (!in_range(e, m) || !distinct.insert(e).second || !uf.unite(e.first, e.second)) return false;
    ++deg[static_cast<std::size_t>(e.first)];
    ++deg[static_cast<std::size_t>(e.second)];
  }
  if (!pairwise_noncrossing(g.edges)) return false;
  std::set<int> internal;
  for (int v = 1; v <= m; ++v)
    if (deg[static_cast<std::size_t>(v)] > 1) internal.insert(v);
  if (internal.empty() || static_cast<int>(internal.size()) == m) return true;
  int starts = 0;
  for (int v : internal)
    if (!internal.count(wrap(v - 1, m))) ++starts;
  return starts == 1;
}

std::optional<std::vector<Chord>> try_gy_order(const Caterpillar& g) {
  const int m = g.m;
  std::vector<Chord> edges;
  for (auto e : g.edges) edges.push_back(make_chord(e.first, e.second));
  const std::size_t E = edges.size();
  std::vector<std::set<std::size_t>> succ(E);
  std::vector<int> indeg(E, 0);
  for (int v = 1; v <= m; ++v) {
    std::vector<std::size_t> inc;
    for (std::size_t e = 0; e < E; ++e)
      if (has_vertex(edges[e], v)) inc.push_back(e);
    // anticlockwise around v, starting from v - 1
    std::sort(inc.begin(), inc.end(), [&](std::size_t x, std::size_t y) {
      return mod(v - 1 - other_end(edges[x], v), m) < mod(v - 1 - other_end(edges[y], v), m);
    });
    for (std::size_t r = 0; r + 1 < inc.size(); ++r)
      if (succ[inc[r]].insert(inc[r + 1]).second) ++indeg[inc[r + 1]];
  }
  std::vector<Chord> order;
  std::vector<std::size_t> ready;
  for (std::size_t e = 0; e < E; ++e)
    if (indeg[e] == 0) ready.push_back(e);
  while (!ready.empty()) {
    if (ready.size() > 1) return std::nullopt;
    auto e = ready.back();
    ready.pop_back();
    order.push_back(edges[e]);
    for (auto f : succ[e])
      if (--indeg[f] == 0) ready.push_back(f);
  }
  if (order.size() != E) return std::nullopt;
  return order;
}

std::vector<Chord> gy_order(const Caterpillar& g) {
  if (!is_caterpillar(g)) throw InvalidArgument("not a geometric caterpillar: " + to_string(g));
  auto o = try_gy_order(g);
  if (!o) throw InvalidArgument("GY order is not linear: " + to_string(g));
  return *o;
}

Caterpillar flip_gc(int i, const Caterpillar& g) {
  auto o = gy_order(g);
  if (i < 0 || i + 1 >= static_cast<int>(o.size())) throw InvalidArgument("generator index out of range");
  auto e = o[static_cast<std::size_t>(i)], f = o[static_cast<std::size_t>(i + 1)];
  const int c = has_vertex(f, e.first) ? e.first : e.second;
  const Chord ab = make_chord(other_end(e, c), other_end(f, c));
  std::vector<Caterpillar> hits;
  for (auto drop : {e, f}) {
    std::vector<Chord> es;
    for (auto x : o)
      if (x != drop) es.push_back(x);
    es.push_back(ab);
    auto h = make_caterpillar(g.m, std::move(es));
    if (is_caterpillar(h)) hits.push_back(std::move(h));
  }
  if (hits.size() > 1) throw std::logic_error("flip_gc: both replacements give caterpillars");
  return hits.empty() ? make_caterpillar(g.m, g.edges) : hits.front();
}

Factorization psi(const Caterpillar& g) { return {g.m, gy_order(g)}; }

std::vector<Caterpillar> enumerate_gc(int m) {
  if (m < 2) throw InvalidArgument("GC needs m >= 2");
  std::vector<Chord> all;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) all.emplace_back(a, b);
  std::vector<Caterpillar> out;
  std::vector<Chord> chosen;
  std::function<void(std::size_t, const UnionFind&)> rec = [&](std::size_t start, const UnionFind& uf) {
    if (static_cast<int>(chosen.size()) == m - 1) {
      Caterpillar g{m, chosen};
      if (is_caterpillar(g)) out.push_back(std::move(g));
      return;
    }
    const std::size_t need = static_cast<std::size_t>(m - 1) - chosen.size();
    for (std::size_t idx = start; idx + need <= all.size(); ++idx) {
      auto e = all[idx];
      bool ok = true;
      for (auto f : chosen)
        if (chords_cross(e, f)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      UnionFind next = uf;
      if (!next.unite(e.first, e.second)) continue;
      chosen.push_back(e);
      rec(idx + 1, next);
      chosen.pop_back();
    }
  };
  rec(0, UnionFind(m));
  return out;
}

// ---------------------------------------------------------------------------
// Text

std::string chords_to_string(const std::vector<Chord>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ',';
    s += "(" + std::to_string(cs[i].first) + "," + std::to_string(cs[i].second) + ")";
  }
  return s;
}

std::vector<Chord> parse_chord_sequence(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || !((s.front() == '(' && s.back() == ')') || (s.front() == '{' && s.back() == '}')))
    throw InvalidArgument("chord list must be wrapped in () or {}");
  std::string_view body = std::string_view(s).substr(1, s.size() - 2);
  std::vector<Chord> out;
  std::size_t pos = 0;
  auto number = [&](char stop) {
    auto end = body.find(stop, pos);
    if (end == std::string_view::npos) throw InvalidArgument("malformed chord list");
    auto t = body.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) throw InvalidArgument("bad vertex in chord list");
    pos = end + 1;
    return v;
  };
  while (pos < body.size()) {
    if (body[pos] != '(') throw InvalidArgument("malformed chord list");
    ++pos;
    int a = number(',');
    int b = number(')');
    if (a == b) throw InvalidArgument("degenerate chord");
    out.push_back(make_chord(a, b));
    if (pos < body.size()) {
      if (body[pos] != ',') throw InvalidArgument("malformed chord list");
      ++pos;
    }
  }
  return out;
}

std::string to_string(const DiagonalSequence& t) { return "(" + chords_to_string(t.diagonals) + ")"; }
std::string to_string(const Factorization& w) { return "(" + chords_to_string(w.factors) + ")"; }
std::string to_string(const Caterpillar& g) { return "{" + chords_to_string(g.edges) + "}"; }

DiagonalSequence parse_ctft(int m, std::string_view text) {
  DiagonalSequence t{m, parse_chord_sequence(text)};
  if (!is_ctft(t)) throw InvalidArgument("not a CTFT of the " + std::to_string(m) + "-gon: " + std::string(text));
  return t;
}

Factorization parse_lf(int m, std::string_view text) {
  Factorization w{m, parse_chord_sequence(text)};
  if (!is_lf(w)) throw InvalidArgument("not a linear factorization of the " + std::to_string(m) + "-cycle: " + std::string(text));
  return w;
}

Caterpillar parse_gc(int m, std::string_view text) {
  auto g = make_caterpillar(m, parse_chord_sequence(text));
  if (!is_caterpillar(g)) throw InvalidArgument("not a geometric caterpillar: " + std::string(text));
  return g;
}

}  // namespace afflip
