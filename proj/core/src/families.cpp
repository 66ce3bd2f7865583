#include "origami/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

RegularOrigami alternating_origami(int n) {
  if (n < 4) throw std::invalid_argument("alternating origami needs n >= 4");
  std::vector<int> c3(n), cn(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  for (int i = 0; i < n; ++i) cn[i] = (i + 1) % n;
  Perm x{std::move(c3)}, y{std::move(cn)};

  unsigned long long half_factorial = 1;
  for (int i = 3; i <= n; ++i) half_factorial *= static_cast<unsigned long long>(i);
  auto group = std::make_shared<const PermGroup>(PermGroup::closure(n, {x, y}));
  if (group->order() != half_factorial)
    throw NotGeneratingError("<(1,2,3), (1,...," + std::to_string(n) +
                             ")> has order " + std::to_string(group->order()) +
                             ", not " + std::to_string(n) + "!/2");
  return make_regular_origami(std::move(group), x, y);
}

RegularOrigami dihedral_origami(int k) {
  if (k < 2) throw std::invalid_argument("dihedral origami needs k >= 2");
  Perm r, s;
  if (k == 2) {
    // the abstract group of order 4 is Klein's; it needs 4 points to act
    // faithfully, with two commuting involutions
    r = Perm::from_cycles(4, {{1, 2}});
    s = Perm::from_cycles(4, {{3, 4}});
  } else {
    std::vector<int> rot(k), flip(k);
    for (int i = 0; i < k; ++i) {
      rot[i] = (i + 1) % k;
      flip[i] = (k - i) % k;
    }
    r = Perm{std::move(rot)};
    s = Perm{std::move(flip)};
  }
  auto group = std::make_shared<const PermGroup>(PermGroup::closure(r.degree(), {r, s}));
  if (group->order() != 2 * static_cast<std::size_t>(k))
    throw std::logic_error("dihedral closure has unexpected order");
  return make_regular_origami(std::move(group), r, s);
}

std::shared_ptr<const PermGroup> psl2_group(int q) {
  if (q < 5) throw std::invalid_argument("psl2_group needs q >= 5");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("q must be prime");

  // points 0..q-1 are the field, point q is infinity
  const int inf = q;
  std::vector<long long> inv(q);
  inv[1] = 1;
  for (long long z = 2; z < q; ++z) {
    // Fermat: z^(q-2) mod q
    long long acc = 1, base = z, e = q - 2;
    while (e) {
      if (e & 1) acc = acc * base % q;
      base = base * base % q;
      e >>= 1;
    }
    inv[z] = acc;
  }

  std::vector<int> t(q + 1), s(q + 1);
  for (int z = 0; z < q; ++z) t[z] = (z + 1) % q;
  t[inf] = inf;
  s[0] = inf;
  s[inf] = 0;
  for (int z = 1; z < q; ++z) s[z] = static_cast<int>((q - inv[z]) % q);

  return std::make_shared<const PermGroup>(
      PermGroup::closure(q + 1, {Perm{std::move(t)}, Perm{std::move(s)}}));
}

std::optional<std::pair<Perm, Perm>> abc_search(const PermGroup& g, long long a,
                                                long long b, long long c,
                                                std::size_t max_group_order) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("orders must be positive");
  if (g.order() > max_group_order)
    throw ResourceLimitError("abc_search capped at group order " +
                             std::to_string(max_group_order));

  const int n = static_cast<int>(g.order());
  std::vector<long long> ord(n);
  for (int i = 0; i < n; ++i) ord[i] = g.element(i).order();

  for (int i = 0; i < n; ++i) {
    if (ord[i] != a) continue;
    for (int j = 0; j < n; ++j) {
      if (ord[j] != b) continue;
      if (ord[g.multiply(i, j)] != c) continue;
      if (is_generating_pair(g, g.element(i), g.element(j)))
        return std::make_pair(g.element(i), g.element(j));
    }
  }
  return std::nullopt;
}

}  // namespace origami
