#include "origami/origami.hpp"

#include <algorithm>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

RegularOrigami make_regular_origami(std::shared_ptr<const PermGroup> group,
                                    Perm x, Perm y) {
  if (!group) throw std::invalid_argument("null group");
  if (!is_generating_pair(*group, x, y))
    throw NotGeneratingError("<x, y> is a proper subgroup of the deck group");
  return RegularOrigami{std::move(group), std::move(x), std::move(y)};
}

bool equivalent(const RegularOrigami& a, const RegularOrigami& b) {
  if (a.group != b.group) {
    if (!a.group || !b.group) throw std::invalid_argument("null group");
    if (a.group->degree() != b.group->degree() || a.group->order() != b.group->order())
      return false;
  }
  return pairs_equivalent(*a.group, a.x, a.y, b.x, b.y);
}

PermOrigami make_perm_origami(Perm sigma_r, Perm sigma_u) {
  if (sigma_r.degree() != sigma_u.degree())
    throw DegreeMismatchError("sigma_r and sigma_u have different degrees");
  int n = sigma_r.degree();
  Perm r_inv = sigma_r.inverse(), u_inv = sigma_u.inverse();
  // connectivity of the square tiling
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int sq = stack.back();
    stack.pop_back();
    for (int next : {sigma_r(sq), sigma_u(sq), r_inv(sq), u_inv(sq)}) {
      if (!seen[next]) {
        seen[next] = 1;
        ++count;
        stack.push_back(next);
      }
    }
  }
  if (count != n)
    throw std::invalid_argument("square tiling is not connected");
  return PermOrigami{n, std::move(sigma_r), std::move(sigma_u)};
}

PermOrigami cayley_origami(const RegularOrigami& o) {
  const PermGroup& g = *o.group;
  int n = static_cast<int>(g.order());
  std::vector<int> right(n), up(n);
  for (int i = 0; i < n; ++i) {
    right[i] = g.index_of(g.element(i) * o.x);
    up[i] = g.index_of(g.element(i) * o.y);
  }
  // transitivity holds because (x, y) generates
  return PermOrigami{n, Perm(std::move(right)), Perm(std::move(up))};
}

Perm vertex_permutation(const PermOrigami& p) {
  return p.sigma_r * p.sigma_u * p.sigma_r.inverse() * p.sigma_u.inverse();
}

std::vector<int> cone_angles(const PermOrigami& p) {
  return vertex_permutation(p).cycle_lengths();
}

int genus(const PermOrigami& p) {
  int vertices = static_cast<int>(cone_angles(p).size());
  int chi = vertices - 2 * p.squares + p.squares;  // V - E + F
  return (2 - chi) / 2;
}

}  // namespace origami
