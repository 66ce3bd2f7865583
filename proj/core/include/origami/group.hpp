#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

// Word over generator indices: letter k >= 0 is generator k, letter ~k
// (bitwise complement, always negative) is its inverse. Evaluation is a left
// fold: [a,b,c] evaluates to gen(a)*gen(b)*gen(c).
using GenWord = std::vector<std::int32_t>;

Perm evaluate_word(const GenWord& w, const std::vector<Perm>& generators, int degree);

// Finite group of permutations with full element enumeration. Element 0 is
// the identity. Every element carries a shortest-found word in the
// generators (breadth-first closure, generators applied in the given order).
class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 1'000'000;

  // Breadth-first closure of the generators. Throws ResourceLimitError if
  // the group would exceed max_order elements.
  static PermGroup closure(int degree, std::vector<Perm> generators,
                           std::size_t max_order = kDefaultMaxOrder);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  const GenWord& word(int i) const { return words_[i]; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // Index of p in elements(), or -1.
  int index_of(const Perm& p) const;
  int identity_index() const { return 0; }
  int multiply(int i, int j) const;
  int inverse_of(int i) const;
  Perm evaluate(const GenWord& w) const;

 private:
  int degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<GenWord> words_;
  std::unordered_map<Perm, int, PermHash> index_;
};

// True iff <x, y> equals the whole group. Both must be members.
bool is_generating_pair(const PermGroup& g, const Perm& x, const Perm& y);

// If x -> x2, y -> y2 extends to an automorphism of g, returns the full
// element map (by element index), otherwise nullopt. Requires (x, y) to be a
// generating pair of g. The candidate map is built by evaluating each
// element's word over (x, y) at (x2, y2); the homomorphism property is
// checked on every edge g*s and bijectivity on the image.
std::optional<std::vector<int>> extend_to_automorphism(const PermGroup& g,
                                                       const Perm& x, const Perm& y,
                                                       const Perm& x2, const Perm& y2);

// Origami equivalence on generating pairs: true iff the assignment extends
// to an automorphism.
bool pairs_equivalent(const PermGroup& g, const Perm& x, const Perm& y,
                      const Perm& x2, const Perm& y2);

}  // namespace origami
