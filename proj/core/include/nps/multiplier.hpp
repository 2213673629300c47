#pragma once

// Multipliers of subsets of Z_n x Z_m and orbit decompositions under x -> t*x.

#include <optional>
#include <vector>

#include "nps/diffset.hpp"

namespace nps {

/// t with gcd(t, n*m) = 1 and a shift g such that t*R = R + g.
struct Multiplier {
  Int t = 1;
  GroupElem shift;
  bool operator==(const Multiplier&) const = default;
};

/// Exhaustive over t in [1, n*m) coprime to n*m and over every shift g.
/// Several shifts are reported for the same t when R has translational symmetry.
std::vector<Multiplier> find_multipliers(const DiffSet& r);

/// True iff x -> t*x is the identity map on Z_n x Z_m.
bool acts_trivially(int n, int m, Int t);

struct Orbit {
  std::vector<GroupElem> elements;  // sorted
  GroupElem min() const { return elements.front(); }
  bool operator==(const Orbit&) const = default;
};

/// Cycles of x -> t*x on Z_n x Z_m, each sorted, ordered by minimal element.
/// Throws std::invalid_argument unless gcd(t, n*m) == 1.
std::vector<Orbit> orbits(int n, int m, Int t);

/// True iff R is a union of orbits of x -> t*x, i.e. t*R == R.
bool is_orbit_union(const DiffSet& r, Int t);

struct OrbitSearchConstraints {
  std::size_t k = 0;                  // required |union|
  std::vector<int> zero_positions;    // h-coordinates the union must avoid
  bool one_per_h = true;              // at most one element per h-coordinate
  bool require_pdpds = true;          // union must verify as an ell-PDPDS
  std::optional<int> ell;             // the ell to verify with; any ell when unset
};

struct OrbitCollection {
  std::vector<Orbit> orbits;   // sorted by minimal element
  DiffSet set;                 // their union
  std::optional<PdpdsParams> params;
};

/// Depth-first search over orbit subsets (largest orbits first) whose union
/// meets the constraints. Branches are cut on running size vs k, then on
/// h-coordinate collisions, then on zero positions. Output is sorted by the
/// lists of minimal elements.
std::vector<OrbitCollection> orbit_union_search(int n, int m, Int t, const OrbitSearchConstraints& constraints);

/// For R_a of a sequence with zero-symbols at h = 0 and h = 1: true iff
/// b_i == b_{(1 - i) mod n} for every nonzero position, i.e. the second
/// coordinates are symmetric under the reflection that fixes {0, 1}.
/// Throws std::invalid_argument if R is not of that shape.
bool check_symmetry_thm(const DiffSet& ra);

}  // namespace nps
