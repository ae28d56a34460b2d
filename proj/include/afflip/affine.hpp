#pragma once

/**
 * @file affine.hpp
 * @brief Affine permutations of type C~n in window notation.
 *
 * An element u of C~n is an odd, (2n+1)-periodic bijection of the integers:
 *
 *   u(-t) = -u(t),   u(t + 2n + 1) = u(t) + 2n + 1.
 *
 * It is determined by its window [u(1), ..., u(n)].  Products follow the
 * function-composition convention (u * v)(t) = u(v(t)) everywhere in this
 * library; generator words are multiplied left to right under that
 * convention, so the word "0 1 2" denotes s0 * s1 * s2.
 */

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace afflip {

using Int = std::int64_t;

/// Thrown for malformed input: invalid windows, out-of-range indices, bad text.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when checked 64-bit arithmetic would wrap.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Period 2n+1 of rank-n affine permutations.
constexpr Int period(int n) { return 2 * static_cast<Int>(n) + 1; }

/// Unique b with m - (2n+1) b in [-n, n].
Int exponent(int n, Int m);

/// m - (2n+1) * exponent(n, m), the representative of m in [-n, n].
Int residue(int n, Int m);

/// a^{*b} = a + (2n+1) b.
Int star(int n, Int a, Int b);

/// The pair (a, b) of a^{*b}, with a in [-n, n] \ {0} for non-multiples of 2n+1.
struct StarValue {
  Int base = 0;
  Int exponent = 0;

  static StarValue decompose(int n, Int m);
  Int value(int n) const { return star(n, base, exponent); }

  friend bool operator==(const StarValue&, const StarValue&) = default;
};

class AffinePermutation {
 public:
  /// Validates the window eagerly; throws InvalidArgument if it does not
  /// extend to an odd periodic bijection.
  AffinePermutation(int rank, std::vector<Int> window);

  static AffinePermutation identity(int rank);

  int rank() const { return rank_; }
  std::span<const Int> window() const { return window_; }
  Int operator[](int i) const { return window_.at(static_cast<std::size_t>(i - 1)); }

  /// u(t) for any integer t.
  Int operator()(Int t) const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  int rank_;
  std::vector<Int> window_;
};

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& u);

/// Integer power; negative exponents use the inverse.
AffinePermutation power(const AffinePermutation& u, Int e);

inline Int apply(const AffinePermutation& u, Int t) { return u(t); }

/// Coxeter generator s_i, 0 <= i <= n.
AffinePermutation generator(int n, int i);

struct GeneratorWord {
  int rank = 2;
  std::vector<int> letters;

  GeneratorWord() = default;
  GeneratorWord(int n, std::vector<int> ls);

  GeneratorWord reversed() const;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

AffinePermutation evaluate_word(const GeneratorWord& w);

// Named elements.
AffinePermutation element_c(int n);
AffinePermutation element_g(int n, int k);  ///< 0 <= k <= n-2
AffinePermutation element_h(int n, int k);  ///< 1 <= k <= n-1
AffinePermutation element_x(int n, int i);  ///< translation, 1 <= i <= n
AffinePermutation element_e(int n, int i);  ///< sign change at i, 1 <= i <= n
AffinePermutation element_v(int n);         ///< [-1, ..., -n]

// The same elements as generator words, straight from their product formulas.
GeneratorWord word_c(int n);
GeneratorWord word_g(int n, int k);
GeneratorWord word_h(int n, int k);
GeneratorWord word_x(int n, int i);
GeneratorWord word_e(int n, int i);
GeneratorWord word_v(int n);

enum class SpecialKind { c, g, h, x, e, v };

struct SpecialName {
  SpecialKind kind = SpecialKind::c;
  int param = 0;
};

/// Parses "c", "v", "g(k)", "h(k)", "x(i)", "e(i)".
SpecialName parse_special_name(std::string_view text);
AffinePermutation special_element(int n, SpecialName name);

/// Sum of window exponents mod 2; 0 exactly on the index-2 subgroup of type B~n.
int parity(const AffinePermutation& u);
bool is_in_B_subgroup(const AffinePermutation& u);

/// "[1,7,3,4]".
std::string to_string(const AffinePermutation& u);
std::ostream& operator<<(std::ostream& os, const AffinePermutation& u);

/// Parses "[1,7,3,4]"; entries may use star form "a*b" for a^{*b}.  The rank
/// is the window length.
AffinePermutation parse_window(std::string_view text);

/// Parses whitespace-separated generator indices, e.g. "0 1 2 3".
GeneratorWord parse_word(int n, std::string_view text);
std::string to_string(const GeneratorWord& w);

}  // namespace afflip
