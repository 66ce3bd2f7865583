#pragma once

#include <memory>
#include <vector>

#include "origami/group.hpp"
#include "origami/perm.hpp"

namespace origami {

// Regular origami (G, x, y): deck transformation group G together with the
// deck transformations mapping a fixed square to its right and upper
// neighbor. Invariant: <x, y> = G (checked by make_regular_origami).
struct RegularOrigami {
  std::shared_ptr<const PermGroup> group;
  Perm x;  // right neighbor
  Perm y;  // upper neighbor
};

// Validates membership and the generating-pair invariant.
// Throws NotGeneratingError if <x, y> is a proper subgroup.
RegularOrigami make_regular_origami(std::shared_ptr<const PermGroup> group,
                                    Perm x, Perm y);

// True iff the tuples differ by an automorphism of the common group.
bool equivalent(const RegularOrigami& a, const RegularOrigami& b);

// Square-by-square model of an origami: sigma_r sends each square to its
// right neighbor, sigma_u to its upper neighbor. Invariant: <sigma_r,
// sigma_u> acts transitively on the squares (the surface is connected).
struct PermOrigami {
  int squares = 1;
  Perm sigma_r;
  Perm sigma_u;
};

// Validates degrees and transitivity.
PermOrigami make_perm_origami(Perm sigma_r, Perm sigma_u);

// Concrete square tiling of a regular origami: squares are the elements of
// G, the right neighbor of square g is g*x, the upper neighbor g*y. Deck
// transformations act by left multiplication and therefore commute with both
// neighbor maps.
PermOrigami cayley_origami(const RegularOrigami& o);

// sigma_r * sigma_u * sigma_r^-1 * sigma_u^-1; its cycles are the vertices
// of the square complex.
Perm vertex_permutation(const PermOrigami& p);

// Multiset of vertex cycle lengths, ascending. A length k means total angle
// 2*pi*k at that vertex; entries k >= 2 are the singularities.
std::vector<int> cone_angles(const PermOrigami& p);

// From the Euler characteristic of the square complex: V - E + F with
// F = N, E = 2N and V the number of vertex cycles.
int genus(const PermOrigami& p);

}  // namespace origami
