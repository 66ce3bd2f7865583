#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace origami {

// Permutation of {0,...,degree-1}, stored as the image table.
//
// Composition convention, fixed for the whole library: (p * q)(i) = p(q(i)),
// i.e. the right factor acts first. A product written as juxtaposition in
// comments ("xy", "yx") always means this. Human-facing I/O (cycle notation,
// JSON) is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  // Disjoint 1-based cycles; points not mentioned are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long e) const;
  // Least k >= 1 with p^k = id; the lcm of the cycle lengths.
  long long order() const;

  // Nontrivial cycles, 1-based, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  // Lengths of all cycles including fixed points, ascending.
  std::vector<int> cycle_lengths() const;

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// p * q applies q first. Throws DegreeMismatchError on unequal degrees.
Perm operator*(const Perm& p, const Perm& q);
inline Perm compose(const Perm& p, const Perm& q) { return p * q; }

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace origami
