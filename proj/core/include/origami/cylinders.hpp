#pragma once

#include <array>
#include <utility>
#include <vector>

#include "origami/origami.hpp"
#include "origami/sl2.hpp"

namespace origami {

// Horizontal cylinder: a stack of rows of squares glued along
// singularity-free interfaces. circumference (w) is the common row length,
// height (h) the number of rows.
struct Cylinder {
  long long circumference = 1;
  long long height = 1;
  std::vector<int> squares;  // 0-based square ids, all rows

  // w/h in lowest terms. Integral whenever the cylinder is a single row,
  // which is the case for every origami with non-abelian deck group.
  std::pair<long long, long long> inverse_modulus() const;
};

// Cylinders of an origami in one rational direction, together with the
// parabolic Veech-group element they produce.
struct CylinderDecomposition {
  std::array<long long, 2> direction{1, 0};
  // A with A*e1 = direction; acting with A maps the decomposition to the
  // horizontal one.
  Sl2Matrix direction_matrix;
  Sl2Word direction_word;
  std::vector<Cylinder> cylinders;
  // Smallest positive integer that is an integer multiple of every
  // cylinder's inverse modulus.
  long long twist_exponent = 1;
  // A^-1 * T^twist_exponent * A; always a member of the Veech group.
  Sl2Matrix parabolic;
  Sl2Word parabolic_word;

  long long total_area() const;
};

// Rows are the cycles of sigma_r; the interface above a row is
// singularity-free iff sigma_u(sigma_r(t)) = sigma_r(sigma_u(t)) for every
// square t of the row, and exactly then the two rows merge.
std::vector<Cylinder> horizontal_cylinders(const PermOrigami& surface);

// Decomposition of o in direction (1, -m), computed as the horizontal
// decomposition of (S^3 T S)^m * o = (G, x*y^m, y).
CylinderDecomposition cylinders_in_direction(const RegularOrigami& o, long long m);

// Same for an arbitrary primitive direction (p, q); the conjugating matrix
// comes from the extended Euclidean algorithm.
CylinderDecomposition cylinders_in_vector_direction(const RegularOrigami& o,
                                                    long long p, long long q);

// The parabolic element of a decomposition, recomputed from its cylinders
// and direction matrix.
Sl2Matrix parabolic_element(const CylinderDecomposition& d);

}  // namespace origami
