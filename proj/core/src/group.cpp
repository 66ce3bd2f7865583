#include "origami/group.hpp"

#include <string>

#include "origami/errors.hpp"

namespace origami {

Perm evaluate_word(const GenWord& w, const std::vector<Perm>& generators, int degree) {
  Perm acc = Perm::identity(degree);
  for (std::int32_t letter : w) {
    const Perm& g = letter >= 0 ? generators.at(letter) : generators.at(~letter);
    acc = letter >= 0 ? acc * g : acc * g.inverse();
  }
  return acc;
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> generators,
                             std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatchError("generator degree " + std::to_string(g.degree()) +
                                " does not match group degree " + std::to_string(degree));

  PermGroup grp;
  grp.degree_ = degree;
  grp.generators_ = std::move(generators);
  grp.elements_.push_back(Perm::identity(degree));
  grp.words_.push_back({});
  grp.index_.emplace(grp.elements_[0], 0);

  for (std::size_t i = 0; i < grp.elements_.size(); ++i) {
    for (std::size_t s = 0; s < grp.generators_.size(); ++s) {
      Perm h = grp.elements_[i] * grp.generators_[s];
      if (grp.index_.count(h)) continue;
      if (grp.elements_.size() >= max_order)
        throw ResourceLimitError("group closure exceeds " + std::to_string(max_order) +
                                 " elements");
      GenWord w = grp.words_[i];
      w.push_back(static_cast<std::int32_t>(s));
      grp.index_.emplace(h, static_cast<int>(grp.elements_.size()));
      grp.elements_.push_back(std::move(h));
      grp.words_.push_back(std::move(w));
    }
  }
  return grp;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::multiply(int i, int j) const {
  return index_.at(elements_[i] * elements_[j]);
}

int PermGroup::inverse_of(int i) const { return index_.at(elements_[i].inverse()); }

Perm PermGroup::evaluate(const GenWord& w) const {
  return evaluate_word(w, generators_, degree_);
}

bool is_generating_pair(const PermGroup& g, const Perm& x, const Perm& y) {
  if (!g.contains(x) || !g.contains(y))
    throw std::invalid_argument("elements are not members of the group");
  // walk <x, y> inside g's element table instead of re-hashing permutations
  std::vector<char> reached(g.order(), 0);
  std::vector<int> stack = {g.identity_index()};
  reached[g.identity_index()] = 1;
  std::size_t count = 1;
  const int xi = g.index_of(x), yi = g.index_of(y);
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int s : {xi, yi}) {
      int h = g.multiply(e, s);
      if (!reached[h]) {
        reached[h] = 1;
        ++count;
        stack.push_back(h);
      }
    }
  }
  return count == g.order();
}

std::optional<std::vector<int>> extend_to_automorphism(const PermGroup& g,
                                                       const Perm& x, const Perm& y,
                                                       const Perm& x2, const Perm& y2) {
  const int xi = g.index_of(x), yi = g.index_of(y);
  const int x2i = g.index_of(x2), y2i = g.index_of(y2);
  if (xi < 0 || yi < 0 || x2i < 0 || y2i < 0)
    throw std::invalid_argument("elements are not members of the group");

  // automorphisms preserve element orders; reject cheap mismatches early
  if (g.element(xi).order() != g.element(x2i).order()) return std::nullopt;
  if (g.element(yi).order() != g.element(y2i).order()) return std::nullopt;

  const int n = static_cast<int>(g.order());
  std::vector<int> phi(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  phi[g.identity_index()] = g.identity_index();
  queue.push_back(g.identity_index());

  const int gens[2] = {xi, yi};
  const int imgs[2] = {x2i, y2i};
  // Synchronized walk over the Cayley graph of <x,y>: the image of each
  // element is forced by its word, and checking phi(e*s) = phi(e)*phi(s) on
  // every edge makes phi a homomorphism on all of the subgroup.
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int e = queue[q];
    for (int k = 0; k < 2; ++k) {
      int h = g.multiply(e, gens[k]);
      int h2 = g.multiply(phi[e], imgs[k]);
      if (phi[h] == -1) {
        phi[h] = h2;
        queue.push_back(h);
      } else if (phi[h] != h2) {
        return std::nullopt;
      }
    }
  }

  if (queue.size() != static_cast<std::size_t>(n))
    throw NotGeneratingError("(x, y) does not generate the group");

  // a total homomorphism is an automorphism iff it is injective
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return phi;
}

bool pairs_equivalent(const PermGroup& g, const Perm& x, const Perm& y,
                      const Perm& x2, const Perm& y2) {
  return extend_to_automorphism(g, x, y, x2, y2).has_value();
}

}  // namespace origami
