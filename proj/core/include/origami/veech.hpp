#pragma once

#include <array>
#include <utility>
#include <vector>

#include "origami/origami.hpp"
#include "origami/sl2.hpp"

namespace origami {

// SL(2,Z)-orbit of a regular origami under the generator action, with nodes
// deduplicated up to origami equivalence. Node 0 is the base origami;
// breadth-first order with letters tried as S, T, S^-1, T^-1, so node
// numbering is reproducible.
struct OrbitGraph {
  std::vector<RegularOrigami> nodes;
  // word mapping the base origami to node i (up to equivalence)
  std::vector<Sl2Word> transversal;
  // edges[i][letter] = node of letter * node_i
  std::vector<std::array<int, 4>> edges;

  int index() const { return static_cast<int>(nodes.size()); }
};

OrbitGraph orbit(const RegularOrigami& o, std::size_t max_nodes = 100000);

// The stabilizer of the base origami: Schreier generators of the orbit
// graph, the induced coset permutations of S and T, and the cusp data of the
// T-action.
struct VeechGroup {
  RegularOrigami base;
  long long index = 1;
  std::vector<Sl2Word> generator_words;
  std::vector<Sl2Matrix> generator_matrices;
  std::vector<int> s_perm;  // node i -> node of S * node_i
  std::vector<int> t_perm;
  std::vector<long long> cusp_widths;  // T-cycle lengths, descending
  long long level = 1;                 // lcm of the cusp widths
};

VeechGroup veech_generators(const OrbitGraph& g);

// Membership in the Veech group: decompose m into a word, act, compare with
// the base up to equivalence. Does not enumerate the orbit.
bool contains(const RegularOrigami& o, const Sl2Matrix& m);

// Cycle lengths of the T-permutation on orbit nodes (descending) and their
// lcm, the generalized level.
std::pair<std::vector<long long>, long long> cusp_data(const OrbitGraph& g);

}  // namespace origami
