#pragma once

// Stabilizer H_k of omega_k, the double cover K_k = <H_k, v>, the type-B
// subgroup G1 (even exponent sum) with M_k = K_k n G1, and explicit involutive
// coset representatives.

#include <string>
#include <utility>
#include <vector>

#include "afflip/affine.hpp"
#include "afflip/flip_action.hpp"

namespace afflip {

struct StabilizerSpec {
  int n = 0;
  int k = 0;
  std::vector<AffinePermutation> generators;
  std::vector<std::string> names;
};

/// [s_0..s_{k-1}, h_k, g_k, s_{k+1}..s_{n-1}], without h_0 and g_{n-1}.
/// Throws std::logic_error if some generator fails to fix omega_k.
StabilizerSpec stabilizer_generators(int n, int k);

/// Window-side membership test: eps_k(u^{-1}(i)) is 0 for i <= k and 1 for
/// i > k, and the exponents of u^{-1}(j), j > k, sum to zero.
bool is_in_Hk(const AffinePermutation& u, int k);

/// u = u_L u_U with u_L supported on residues in [-k, k] and u_U on the rest.
std::pair<AffinePermutation, AffinePermutation> split_LU(const AffinePermutation& u, int k);

bool is_in_Kk(const AffinePermutation& u, int k);
bool is_in_Mk(const AffinePermutation& u, int k);

/// {s_0, ..., s_{n-1}, s_n s_{n-1} s_n}.
std::vector<AffinePermutation> B_subgroup_generators(int n);
std::vector<GeneratorWord> B_subgroup_generator_words(int n);

struct TauInvolution {
  std::vector<int> J;
  std::vector<std::pair<int, int>> pairs;  ///< (i_r, j_r), i_r <= k < j_r, both rows increasing

  /// tau(x) for 1 <= x <= n.
  int operator()(int x) const;
  friend bool operator==(const TauInvolution&, const TauInvolution&) = default;
};

/// tau_J for one k-subset J of [n].
TauInvolution tau_for(int n, int k, std::vector<int> J);
/// All C(n, k) involutions, J in lexicographic order.
std::vector<TauInvolution> transversal_T(int n, int k);

enum class GroupType { C, B };

std::string to_string(GroupType g);
GroupType parse_group_type(std::string_view s);

struct CosetRepresentative {
  GroupType group = GroupType::C;
  int n = 0;
  int k = 0;
  TauInvolution tau;
  std::string family;
  std::vector<int> signs;  ///< free sign choices, in index order
  Int d = 0;
  AffinePermutation realized = AffinePermutation::identity(2);
};

/// All representatives with |d| <= d_bound.  Each is checked to be an
/// involution (and of even parity for type B); failure throws std::logic_error.
std::vector<CosetRepresentative> involutive_reps(int n, int k, GroupType g, int d_bound);

struct CosetCollision {
  std::size_t first = 0;
  std::size_t second = 0;
  OmegaState cls;
};

struct CosetReport {
  int n = 0;
  int k = 0;
  GroupType group = GroupType::C;
  int d_bound = 0;
  int margin = 0;
  std::size_t representatives = 0;
  std::size_t targets = 0;
  bool injective = false;
  bool covering = false;
  std::vector<CosetCollision> collisions;
  std::vector<OmegaState> gaps;

  bool ok() const { return injective && covering; }
};

/// Maps each representative to the signed class of r_k(sigma) and compares the
/// image against every signed class of Omega_{n,k} with |b| <= d_bound - margin.
/// For type B only classes in the G1-orbit of [omega_k] are targets.
CosetReport coset_map_check(int n, int k, GroupType g, int d_bound = 4, int margin = 1);

}  // namespace afflip
