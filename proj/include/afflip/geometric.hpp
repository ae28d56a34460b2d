#pragma once

// Three geometric models on a convex m-gon with vertices 1..m in cyclic order:
//   - colored triangle-free triangulations (CTFT), m = n + 4,
//   - linear factorizations of the long cycle (LF), m = n + 3,
//   - geometric caterpillars (GC), m = n + 3.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afflip/flip_action.hpp"

namespace afflip {

/// Unordered vertex pair, stored with first < second.
using Chord = std::pair<int, int>;

Chord make_chord(int a, int b);

/// True iff the straight segments cross in their interiors (shared endpoints do not count).
bool chords_cross(Chord e, Chord f);

/// True iff the chord is not a polygon side and not a loop.
bool is_proper_chord(Chord e, int m);
/// Short chords (i-1, i+1) cut off a single triangle.
bool is_short_chord(Chord e, int m);

// ---------------------------------------------------------------------------
// CTFT

struct DiagonalSequence {
  int m = 0;
  std::vector<Chord> diagonals;  ///< d_0, ..., d_n

  friend bool operator==(const DiagonalSequence&, const DiagonalSequence&) = default;
  friend auto operator<=>(const DiagonalSequence& a, const DiagonalSequence& b) {
    return a.diagonals <=> b.diagonals;
  }
};

bool is_ctft(const DiagonalSequence& t);

/// s_i T: d_i replaced by the other diagonal of its quadrangle when the result
/// is again a CTFT, otherwise T.
DiagonalSequence flip_ctft(int i, const DiagonalSequence& t);

/// CTFT(n+4) -> Omega_{n,0,n+4}.
OmegaState phi_tft(const DiagonalSequence& t);
DiagonalSequence phi_tft_inv(const OmegaState& x);

/// phi^{-1}(-phi(T)).
DiagonalSequence iota_tft(const DiagonalSequence& t);
/// The mirror image v -> m - v (vertex m fixed).
DiagonalSequence reflect_tft(const DiagonalSequence& t);

std::vector<DiagonalSequence> enumerate_ctft(int m);

// ---------------------------------------------------------------------------
// LF

struct Factorization {
  int m = 0;
  std::vector<Chord> factors;  ///< t_1, ..., t_{m-1}

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization& a, const Factorization& b) { return a.factors <=> b.factors; }
};

/// t_1 t_2 ... t_r as a map on 1..m (index 0 unused); the last factor acts first.
std::vector<int> product_permutation(const std::vector<Chord>& factors, int m);

/// Product equals the long cycle x -> x+1 and consecutive factors share exactly one letter.
bool is_lf(const Factorization& w);

/// b_i (1-indexed): (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..).
Factorization hurwitz(int i, const Factorization& w);
Factorization hurwitz_inv(int i, const Factorization& w);

/// b_{i+1}(w) if linear, else b_{i+1}^{-1}(w) if linear, else w.
Factorization rho_LF(int i, const Factorization& w);

/// LF_{n+3} -> Omega_{n,0,n+3}.
OmegaState phi_lf(const Factorization& w);
Factorization phi_lf_inv(const OmegaState& x);
Factorization iota_lf(const Factorization& w);

std::vector<Factorization> enumerate_lf(int m);

// ---------------------------------------------------------------------------
// GC

struct Caterpillar {
  int m = 0;
  std::vector<Chord> edges;  ///< sorted

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
  friend auto operator<=>(const Caterpillar& a, const Caterpillar& b) { return a.edges <=> b.edges; }
};

Caterpillar make_caterpillar(int m, std::vector<Chord> edges);

/// Noncrossing tree whose internal vertices form a cyclic interval.
bool is_caterpillar(const Caterpillar& g);

/// Linear extension of the local anticlockwise orders around each vertex,
/// or nullopt when those orders do not determine a unique linear order.
std::optional<std::vector<Chord>> try_gy_order(const Caterpillar& g);
std::vector<Chord> gy_order(const Caterpillar& g);

/// s_i: with e_i, e_{i+1} meeting at c and other ends a, b, replace e_i or
/// e_{i+1} by (a, b) when that gives a caterpillar.  Throws std::logic_error
/// if both replacements succeed.
Caterpillar flip_gc(int i, const Caterpillar& g);

/// Edges in GY order read as transpositions.
Factorization psi(const Caterpillar& g);

std::vector<Caterpillar> enumerate_gc(int m);

// ---------------------------------------------------------------------------
// Text

/// "(1,7),(1,6)", without enclosing brackets.
std::string chords_to_string(const std::vector<Chord>& cs);
std::vector<Chord> parse_chord_sequence(std::string_view text);

std::string to_string(const DiagonalSequence& t);
std::string to_string(const Factorization& w);
/// "{(1,8),(1,7)}".
std::string to_string(const Caterpillar& g);

/// The parsers throw InvalidArgument unless the result lies in the model.
DiagonalSequence parse_ctft(int m, std::string_view text);
Factorization parse_lf(int m, std::string_view text);
Caterpillar parse_gc(int m, std::string_view text);

}  // namespace afflip
