#pragma once

// Flip action of C~n on Z_3^n x Z and its quotients mod m.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "afflip/affine.hpp"

namespace afflip {

/// A point (a_1, ..., a_n; b).  modulus == 0 means b ranges over Z, otherwise
/// b is kept as its residue in [0, modulus).
struct OmegaState {
  std::vector<std::int8_t> trits;
  Int b = 0;
  Int modulus = 0;

  OmegaState() = default;
  OmegaState(std::vector<std::int8_t> a, Int b_, Int m = 0);

  int rank() const { return static_cast<int>(trits.size()); }
  int zero_count() const;

  friend bool operator==(const OmegaState&, const OmegaState&) = default;
};

/// Lexicographic on trits (-1 < 0 < 1), then b.
bool operator<(const OmegaState& x, const OmegaState& y);

struct OmegaStateHash {
  std::size_t operator()(const OmegaState& x) const;
};

/// Packs trits and b into one 64-bit key; injective for rank <= 20 and |b| < 2^23.
std::uint64_t encode(const OmegaState& x);

OmegaState rho_generator(int i, const OmegaState& x);
/// Letters applied right to left, so rho_word(uv, x) = rho_word(u, rho_word(v, x)).
OmegaState rho_word(const GeneratorWord& w, const OmegaState& x);

/// -(a; b) = (-a; -b).
OmegaState negate(const OmegaState& x);

/// Same trits, b reduced mod m (m > 0).
OmegaState reduce(const OmegaState& x, Int m);

/// k-sign of t.
int epsilon(int n, int k, Int t);
Int P_k(const AffinePermutation& u, int k);
/// Image of omega_k under u, computed from the window of u.
OmegaState r_k(const AffinePermutation& u, int k, Int modulus = 0);

/// omega_k = (0^k, 1^{n-k}; 0).
OmegaState omega_base(int n, int k, Int modulus = 0);

/// |Omega_{n,k,m}| = C(n,k) 2^{n-k} m.
std::uint64_t orbit_size_formula(int n, int k, Int m);
std::uint64_t binomial(int n, int k);

/// All states with exactly k zero trits and b in [0, m), sorted.
std::vector<OmegaState> enumerate_orbit(int n, int k, Int m);

struct SignedClass {
  OmegaState representative;
  bool self_negative = false;

  friend bool operator==(const SignedClass&, const SignedClass&) = default;
};

SignedClass signed_class(const OmegaState& x);

/// One class per {x, -x}; throws InvalidArgument if the input is not closed
/// under negation.  Output sorted by representative.
std::vector<SignedClass> signed_quotient(const std::vector<OmegaState>& states);

struct TransitivityReport {
  bool transitive = false;
  std::size_t reached = 0;
  std::size_t expected = 0;
  std::vector<OmegaState> states;      ///< BFS order
  std::vector<GeneratorWord> witness;  ///< rho_word(witness[i], start) == states[i]
  std::vector<int> depth;
};

/// Breadth-first search from `start` under the generators; stops after `cap` states.
TransitivityReport bfs_orbit(const OmegaState& start, std::size_t cap = 1000000);

/// BFS from omega_k must reach exactly enumerate_orbit(n, k, m).
TransitivityReport transitivity_check(int n, int k, Int m);

/// "(1,-1,0;3)".
std::string to_string(const OmegaState& x);
OmegaState parse_state(std::string_view text, Int modulus = 0);

}  // namespace afflip
