#pragma once

// Orbital analysis of finite permutation actions.  The permutation module of
// a finite transitive action is multiplicity-free exactly when its orbital
// (centralizer) algebra is commutative; all orbitals being self-paired is the
// sufficient condition used by the Gelfand trick.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "afflip/stabilizers.hpp"

namespace afflip {

struct FiniteAction {
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> generators;  ///< generators[g][x] = image of x
  std::vector<std::string> generator_names;
  std::optional<std::size_t> base;  ///< distinguished point, if any

  std::size_t size() const { return labels.size(); }
};

/// Throws InvalidArgument unless every generator is a bijection of the state set.
void validate_action(const FiniteAction& a);

struct ActionSpec {
  std::string model = "omega";  ///< omega, omega_signed, arc, ctft, lf, gc
  int n = 2;
  int k = 0;  ///< number of zero trits on the Omega side (arc: n - k interior entries)
  Int m = 0;  ///< modulus for omega; the geometric models fix their own
  GroupType group = GroupType::C;
  bool signed_quotient = false;  ///< omega: classes {x, -x}; models: classes {x, iota x}
};

/// Generators are ordered so that generator i realizes s_i after transport to
/// Omega (for LF this is rho_LF(n - i)).  For type B they are
/// s_0, ..., s_{n-1}, s_n s_{n-1} s_n.  The base point corresponds to omega_k.
FiniteAction build_action(const ActionSpec& spec);

/// Number of points the model has before any quotient.
std::uint64_t model_size_formula(const ActionSpec& spec);

/// Classes of an involution commuting with every generator.
FiniteAction quotient_by_involution(const FiniteAction& a, const std::vector<std::uint32_t>& inv);

/// Orbit of `start` with the induced generators; base moves along.
FiniteAction restrict_to_orbit(const FiniteAction& a, std::size_t start);

std::vector<std::size_t> orbit_of(const FiniteAction& a, std::size_t start);

struct OrbitalDecomposition {
  std::size_t points = 0;
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> orbital;   ///< orbital[x * points + y]
  std::vector<std::uint32_t> pairing;   ///< orbital of (y, x)
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> first_pair;  ///< smallest pair index in each orbital

  std::uint32_t of(std::size_t x, std::size_t y) const { return orbital[x * points + y]; }
};

/// Orbitals numbered in order of their smallest pair x * N + y.
OrbitalDecomposition orbitals(const FiniteAction& a);

struct GelfandCertificate {
  std::size_t states = 0;
  std::uint32_t rank = 0;
  bool transitive = false;
  bool self_paired = false;
  bool commutative = false;
  bool multiplicity_free = false;
  std::size_t self_paired_count = 0;
  /// (i, j, k) with p^k_{ij} != p^k_{ji}, and the two values.
  std::optional<std::array<std::uint32_t, 3>> witness;
  std::uint64_t witness_pij = 0;
  std::uint64_t witness_pji = 0;
  std::vector<std::uint64_t> suborbit_sizes;  ///< orbitals through the base point
};

/// Structure constants p^k_{ij} = #{y : (x,y) in O_i, (y,z) in O_j} for a
/// representative (x, z) of O_k, cross-checked on a second representative.
/// Threads from AFFLIP_THREADS (default 1).
GelfandCertificate structure_constants_commute(const FiniteAction& a, const OrbitalDecomposition& dec);
GelfandCertificate certify(const FiniteAction& a);

struct Suborbit {
  std::uint32_t orbital = 0;
  std::uint64_t size = 0;
  bool self_paired = false;
};

struct CosetInvolutionReport {
  std::vector<Suborbit> suborbits;
  bool all_self_paired = false;
};

CosetInvolutionReport coset_involution_check(const FiniteAction& a, std::size_t base);

struct BSubgroupReport {
  GelfandCertificate certificate;
  std::size_t full_orbit = 0;      ///< orbit of [omega_k] under all of C~n
  std::size_t subgroup_orbit = 0;  ///< orbit under G1
};

/// G1 acting on the orbit of [omega_k] in the signed quotient of Omega_{n,k,m}.
BSubgroupReport b_subgroup_action_check(int n, int k, Int m);

/// True iff x -> map[x] carries the orbitals of a onto those of b, pairing included.
bool orbitals_correspond(const OrbitalDecomposition& a, const OrbitalDecomposition& b,
                         const std::vector<std::size_t>& map);

}  // namespace afflip
