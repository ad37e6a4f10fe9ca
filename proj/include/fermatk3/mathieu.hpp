#pragma once

#include <cstdint>
#include <vector>

#include "fermatk3/golay.hpp"
#include "fermatk3/perm_group.hpp"

namespace fermatk3 {

// The Mathieu group M24 on the 24 points {0..23} (point x < 23 is the field
// element x of F_23, point 23 is the point at infinity of the projective
// line). Built from a hardcoded standard generating triple; every generator
// is verified to preserve the octads of the given code, and the resulting
// stabilizer chain must produce the full order 244823040, else ShapeError.
PermGroup m24_construct(const GolayCode& code);

// Largest power of two dividing n (n >= 1).
long long two_part(long long n);

// Sylow 2-subgroup by seeded deterministic ascent: first descend into
// point stabilizers of odd orbits (their index is odd, so they contain a
// full Sylow 2-subgroup), then grow a 2-subgroup by 2-elements that
// normalize it or close with it into a larger 2-group. Runs out of budget
// with SearchExhausted; a different seed reshuffles the search.
PermGroup sylow2(const PermGroup& g, std::uint64_t seed = 0,
                 std::size_t budget = 20000);

// Orbit sizes of the group on its points, ascending.
std::vector<long> orbit_sizes(const PermGroup& g);

// All candidate orbit-size multisets: `orbit_count` parts summing to
// `total`, at least one part equal to 1 (the action fixes a point), and --
// unless disabled -- every part a power of two (orbits of a 2-group).
// Each solution ascending; the list is sorted.
std::vector<std::vector<long>> orbit_type_solver(long total, int orbit_count,
                                                 bool powers_of_two = true);

}  // namespace fermatk3
