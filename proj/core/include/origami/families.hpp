#pragma once

#include <optional>
#include <utility>

#include "origami/origami.hpp"

namespace origami {

// (A_n, (1,2,3), (1,2,...,n)). The closure is checked against n!/2; for
// even n the pair generates S_n instead and NotGeneratingError is thrown.
RegularOrigami alternating_origami(int n);

// Dihedral group of order 2k with the rotation as right neighbor and the
// inverting involution as upper neighbor. k = 4 is the 8-square figure with
// two horizontal cylinders of inverse modulus 4.
RegularOrigami dihedral_origami(int k);

// PSL(2, q) acting on the q + 1 points of the projective line, generated by
// z -> z + 1 and z -> -1/z. Order q(q^2 - 1)/2. Requires q prime, q >= 5.
std::shared_ptr<const PermGroup> psl2_group(int q);

// First pair (x, y) in element-index order with ord(x) = a, ord(y) = b,
// ord(xy) = c and <x, y> = G; nullopt if none exists. Deterministic, so
// fixtures built on the result are stable.
std::optional<std::pair<Perm, Perm>> abc_search(const PermGroup& g, long long a,
                                                long long b, long long c,
                                                std::size_t max_group_order = 10000);

}  // namespace origami
