#pragma once

#include <memory>
#include <vector>

#include "origami/families.hpp"
#include "origami/origami.hpp"

namespace origami::testfix {

inline RegularOrigami torus() {
  auto g = std::make_shared<const PermGroup>(PermGroup::closure(1, {Perm::identity(1)}));
  return make_regular_origami(g, Perm::identity(1), Perm::identity(1));
}

inline const RegularOrigami& d8() {
  static const RegularOrigami o = dihedral_origami(4);
  return o;
}

inline const RegularOrigami& d10() {
  static const RegularOrigami o = dihedral_origami(5);
  return o;
}

inline const RegularOrigami& a5() {
  static const RegularOrigami o = alternating_origami(5);
  return o;
}

// (G, y, x) for the first (2,3,7)-generating pair of PSL(2,7); 168 squares.
inline const RegularOrigami& psl27() {
  static const RegularOrigami o = [] {
    auto g = psl2_group(7);
    auto pair = abc_search(*g, 2, 3, 7);
    return make_regular_origami(g, pair->second, pair->first);
  }();
  return o;
}

// The origamis every whole-catalog test sweeps over.
inline std::vector<RegularOrigami> catalog() {
  return {torus(), d8(), d10(), a5(), psl27()};
}

}  // namespace origami::testfix
