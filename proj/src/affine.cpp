#include "afflip/affine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace afflip {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_rank(int n) {
  if (n < 2) throw InvalidArgument("rank must be at least 2");
}

}  // namespace

Int exponent(int n, Int m) {
  const Int N = period(n);
  return floor_div(checked_add(m, n), N);
}

Int residue(int n, Int m) { return m - period(n) * exponent(n, m); }

Int star(int n, Int a, Int b) { return checked_add(a, checked_mul(period(n), b)); }

StarValue StarValue::decompose(int n, Int m) { return {afflip::residue(n, m), afflip::exponent(n, m)}; }

AffinePermutation::AffinePermutation(int rank, std::vector<Int> window)
    : rank_(rank), window_(std::move(window)) {
  require_rank(rank_);
  if (window_.size() != static_cast<std::size_t>(rank_))
    throw InvalidArgument("window length does not match rank");
  std::vector<bool> seen(static_cast<std::size_t>(rank_) + 1, false);
  for (Int x : window_) {
    Int a = residue(rank_, x);
    if (a == 0) throw InvalidArgument("window entry divisible by 2n+1");
    Int j = a < 0 ? -a : a;
    if (seen[static_cast<std::size_t>(j)]) throw InvalidArgument("window entries collide modulo 2n+1 up to sign");
    seen[static_cast<std::size_t>(j)] = true;
  }
}

AffinePermutation AffinePermutation::identity(int rank) {
  require_rank(rank);
  std::vector<Int> w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(rank, std::move(w));
}

Int AffinePermutation::operator()(Int t) const {
  const Int N = period(rank_);
  Int b = exponent(rank_, t);
  Int a = t - N * b;
  Int shift = checked_mul(N, b);
  if (a == 0) return shift;
  Int base = a > 0 ? window_[static_cast<std::size_t>(a - 1)] : -window_[static_cast<std::size_t>(-a - 1)];
  return checked_add(base, shift);
}

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.rank() != v.rank()) throw InvalidArgument("rank mismatch in compose");
  std::vector<Int> w;
  w.reserve(static_cast<std::size_t>(u.rank()));
  for (Int x : v.window()) w.push_back(u(x));
  return AffinePermutation(u.rank(), std::move(w));
}

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) { return compose(u, v); }

AffinePermutation inverse(const AffinePermutation& u) {
  const int n = u.rank();
  const Int N = period(n);
  std::vector<Int> r(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Int x = u[i];
    Int b = exponent(n, x);
    Int a = x - N * b;
    if (a > 0)
      r[static_cast<std::size_t>(a - 1)] = checked_add(i, -checked_mul(N, b));
    else
      r[static_cast<std::size_t>(-a - 1)] = checked_add(-i, checked_mul(N, b));
  }
  return AffinePermutation(n, std::move(r));
}

AffinePermutation power(const AffinePermutation& u, Int e) {
  AffinePermutation base = e < 0 ? inverse(u) : u;
  Int k = e < 0 ? -e : e;
  AffinePermutation acc = AffinePermutation::identity(u.rank());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

AffinePermutation generator(int n, int i) {
  require_rank(n);
  if (i < 0 || i > n) throw InvalidArgument("generator index out of range");
  std::vector<Int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
  if (i == 0)
    w[0] = -1;
  else if (i < n)
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  else
    w[static_cast<std::size_t>(n - 1)] = n + 1;
  return AffinePermutation(n, std::move(w));
}

GeneratorWord::GeneratorWord(int n, std::vector<int> ls) : rank(n), letters(std::move(ls)) {
  require_rank(n);
  for (int l : letters)
    if (l < 0 || l > n) throw InvalidArgument("generator index out of range in word");
}

GeneratorWord GeneratorWord::reversed() const {
  GeneratorWord r = *this;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

AffinePermutation evaluate_word(const GeneratorWord& w) {
  AffinePermutation u = AffinePermutation::identity(w.rank);
  for (int l : w.letters) u = u * generator(w.rank, l);
  return u;
}

namespace {

std::vector<Int> identity_window(int n) {
  std::vector<Int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
  return w;
}

void append_range(std::vector<int>& out, int from, int to) {
  if (from <= to)
    for (int i = from; i <= to; ++i) out.push_back(i);
  else
    for (int i = from; i >= to; --i) out.push_back(i);
}

void check_param(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

AffinePermutation element_c(int n) {
  require_rank(n);
  std::vector<Int> w;
  for (int j = 2; j <= n; ++j) w.push_back(j);
  w.push_back(star(n, 1, 1));
  return AffinePermutation(n, std::move(w));
}

AffinePermutation element_g(int n, int k) {
  require_rank(n);
  check_param(k >= 0 && k <= n - 2, "g(k) requires 0 <= k <= n-2");
  std::vector<Int> w;
  for (int j = 1; j <= k; ++j) w.push_back(j);
  w.push_back(star(n, n, -1));
  for (int j = k + 2; j <= n - 1; ++j) w.push_back(j);
  w.push_back(star(n, k + 1, 1));
  return AffinePermutation(n, std::move(w));
}

AffinePermutation element_h(int n, int k) {
  require_rank(n);
  check_param(k >= 1 && k <= n - 1, "h(k) requires 1 <= k <= n-1");
  auto w = identity_window(n);
  w[static_cast<std::size_t>(k - 1)] = star(n, -k, 1);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation element_x(int n, int i) {
  require_rank(n);
  check_param(i >= 1 && i <= n, "x(i) requires 1 <= i <= n");
  auto w = identity_window(n);
  w[static_cast<std::size_t>(i - 1)] = star(n, i, 1);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation element_e(int n, int i) {
  require_rank(n);
  check_param(i >= 1 && i <= n, "e(i) requires 1 <= i <= n");
  auto w = identity_window(n);
  w[static_cast<std::size_t>(i - 1)] = -i;
  return AffinePermutation(n, std::move(w));
}

AffinePermutation element_v(int n) {
  auto w = identity_window(n);
  for (auto& x : w) x = -x;
  return AffinePermutation(n, std::move(w));
}

GeneratorWord word_c(int n) {
  std::vector<int> ls;
  append_range(ls, 0, n);
  return GeneratorWord(n, std::move(ls));
}

// c^{-1} s_1...s_k s_{k+1} s_k...s_1 c
GeneratorWord word_g(int n, int k) {
  check_param(k >= 0 && k <= n - 2, "g(k) requires 0 <= k <= n-2");
  std::vector<int> ls;
  append_range(ls, n, 0);
  append_range(ls, 1, k + 1);
  if (k >= 1) append_range(ls, k, 1);
  append_range(ls, 0, n);
  return GeneratorWord(n, std::move(ls));
}

GeneratorWord word_h(int n, int k) {
  check_param(k >= 1 && k <= n - 1, "h(k) requires 1 <= k <= n-1");
  std::vector<int> ls;
  append_range(ls, k, n);
  append_range(ls, n - 1, k);
  return GeneratorWord(n, std::move(ls));
}

GeneratorWord word_x(int n, int i) {
  check_param(i >= 1 && i <= n, "x(i) requires 1 <= i <= n");
  std::vector<int> ls;
  append_range(ls, i - 1, 0);
  if (i >= 2) append_range(ls, 1, i - 1);
  append_range(ls, i, n);
  if (i <= n - 1) append_range(ls, n - 1, i);
  return GeneratorWord(n, std::move(ls));
}

GeneratorWord word_e(int n, int i) {
  check_param(i >= 1 && i <= n, "e(i) requires 1 <= i <= n");
  std::vector<int> ls;
  append_range(ls, i - 1, 0);
  if (i >= 2) append_range(ls, 1, i - 1);
  return GeneratorWord(n, std::move(ls));
}

GeneratorWord word_v(int n) {
  GeneratorWord w(n, {});
  for (int i = 1; i <= n; ++i) {
    auto e = word_e(n, i);
    w.letters.insert(w.letters.end(), e.letters.begin(), e.letters.end());
  }
  return w;
}

SpecialName parse_special_name(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "c") return {SpecialKind::c, 0};
  if (s == "v") return {SpecialKind::v, 0};
  if (s.size() >= 4 && s[1] == '(' && s.back() == ')') {
    int p = 0;
    auto body = std::string_view(s).substr(2, s.size() - 3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) throw InvalidArgument("bad special element parameter");
    switch (s[0]) {
      case 'g': return {SpecialKind::g, p};
      case 'h': return {SpecialKind::h, p};
      case 'x': return {SpecialKind::x, p};
      case 'e': return {SpecialKind::e, p};
      default: break;
    }
  }
  throw InvalidArgument("unknown special element: " + std::string(text));
}

AffinePermutation special_element(int n, SpecialName name) {
  switch (name.kind) {
    case SpecialKind::c: return element_c(n);
    case SpecialKind::g: return element_g(n, name.param);
    case SpecialKind::h: return element_h(n, name.param);
    case SpecialKind::x: return element_x(n, name.param);
    case SpecialKind::e: return element_e(n, name.param);
    case SpecialKind::v: return element_v(n);
  }
  throw InvalidArgument("unknown special element");
}

int parity(const AffinePermutation& u) {
  Int s = 0;
  for (Int x : u.window()) s += exponent(u.rank(), x);
  return static_cast<int>(((s % 2) + 2) % 2);
}

bool is_in_B_subgroup(const AffinePermutation& u) { return parity(u) == 0; }

std::string to_string(const AffinePermutation& u) {
  std::string s = "[";
  bool first = true;
  for (Int x : u.window()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(x);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& u) { return os << to_string(u); }

namespace {

Int parse_int(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw InvalidArgument("not an integer: '" + std::string(t) + "'");
  return v;
}

}  // namespace

AffinePermutation parse_window(std::string_view text) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw InvalidArgument("window must be bracketed, e.g. [1,7,3,4]");
  for (std::size_t i = 0; i < text.size(); ++i)
    if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(text[i])))
      throw InvalidArgument("trailing characters after window");
  auto body = text.substr(open + 1, close - open - 1);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  const int n = static_cast<int>(parts.size());
  require_rank(n);
  std::vector<Int> w;
  for (auto p : parts) {
    auto st = p.find('*');
    if (st == std::string_view::npos)
      w.push_back(parse_int(p));
    else
      w.push_back(star(n, parse_int(p.substr(0, st)), parse_int(p.substr(st + 1))));
  }
  return AffinePermutation(n, std::move(w));
}

GeneratorWord parse_word(int n, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> ls;
  std::string tok;
  while (in >> tok) ls.push_back(static_cast<int>(parse_int(tok)));
  return GeneratorWord(n, std::move(ls));
}

std::string to_string(const GeneratorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

}  // namespace afflip
