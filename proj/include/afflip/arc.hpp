#pragma once

// Partial arc permutations A_{m,k} and their flip action.
//
// Entries are values in [1, m] or 0 for a hole (written "_").  Values are read
// in Z_m, with m standing for 0.  A sequence is in A_{m,k} when
//   (i)   the non-hole entries of every suffix form a cyclic interval,
//   (ii)  exactly k interior positions hold values,
//   (iii) the first and last positions hold values,
//   (iv)  pi(1) is determined by the first interior value v = pi(i0): it is
//         v - k - 1 if v - 1 occurs later, and v + k + 1 if v + 1 does.
// With k = m - 2 these are exactly the arc permutations of [m].

#include <string>
#include <string_view>
#include <vector>

#include "afflip/flip_action.hpp"

namespace afflip {

struct PartialArcPermutation {
  std::vector<int> entries;

  int m() const { return static_cast<int>(entries.size()); }
  /// Number of interior non-hole entries.
  int k() const;

  friend bool operator==(const PartialArcPermutation&, const PartialArcPermutation&) = default;
  friend auto operator<=>(const PartialArcPermutation& a, const PartialArcPermutation& b) {
    return a.entries <=> b.entries;
  }
};

/// True iff S (values in [1, m]) is a cyclic interval of Z_m.
bool is_cyclic_interval(const std::vector<int>& values, int m);

bool is_partial_arc(const std::vector<int>& entries, int m, int k);
bool is_partial_arc(const PartialArcPermutation& p);

/// Flip action of s_i (0 <= i <= m-2): swap positions i+1 and i+2.  When the
/// swap breaks only the first-entry rule (iv), pi(1) is moved to the value the
/// rule prescribes; otherwise an invalid swap leaves pi unchanged.
PartialArcPermutation rho_A(int i, const PartialArcPermutation& p);

/// Plain rule: swap positions i+1 and i+2 if the result stays in A_{m,k}.
/// Coincides with rho_A on full arc permutations.
PartialArcPermutation swap_if_partial_arc(int i, const PartialArcPermutation& p);

/// x -> m - x on values other than m; holes and m fixed.
PartialArcPermutation iota_arc(const PartialArcPermutation& p);

/// Bijection A_{n+2,k} -> Omega_{n,n-k,n+2}.
OmegaState phi_arc(const PartialArcPermutation& p);
PartialArcPermutation phi_arc_inv(const OmegaState& x);

/// Sorted list of A_{m,k}, 1 <= k <= m-2.
std::vector<PartialArcPermutation> enumerate_arc(int m, int k);

/// "[8,_,5,1,_,4,2,3]".
std::string to_string(const PartialArcPermutation& p);
PartialArcPermutation parse_arc(std::string_view text);

}  // namespace afflip
