#include "origami/veech.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "origami/errors.hpp"

namespace origami {

namespace {

constexpr std::array<Sl2Letter, 4> kLetters = {Sl2Letter::S, Sl2Letter::T,
                                               Sl2Letter::SInv, Sl2Letter::TInv};

// Cheap equivalence invariants of a generating pair, used to bucket orbit
// nodes before running the exact automorphism test. The commutator order
// determines the cone-angle multiset for a regular origami.
struct PairKey {
  long long ord_x, ord_y, ord_xy, ord_xyinv, ord_comm;
  bool operator==(const PairKey&) const = default;
};

PairKey pair_key(const RegularOrigami& o) {
  Perm comm = o.y.inverse() * o.x.inverse() * o.y * o.x;
  return {o.x.order(), o.y.order(), (o.x * o.y).order(),
          (o.x * o.y.inverse()).order(), comm.order()};
}

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (long long v : {k.ord_x, k.ord_y, k.ord_xy, k.ord_xyinv, k.ord_comm}) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

OrbitGraph orbit(const RegularOrigami& o, std::size_t max_nodes) {
  OrbitGraph g;
  g.nodes.push_back(o);
  g.transversal.emplace_back();
  std::unordered_map<PairKey, std::vector<int>, PairKeyHash> buckets;
  buckets[pair_key(o)].push_back(0);

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::array<int, 4> row{};
    for (std::size_t li = 0; li < kLetters.size(); ++li) {
      RegularOrigami cand = act_generator(g.nodes[i], kLetters[li]);
      PairKey key = pair_key(cand);
      int target = -1;
      for (int node : buckets[key]) {
        if (pairs_equivalent(*o.group, g.nodes[node].x, g.nodes[node].y, cand.x, cand.y)) {
          target = node;
          break;
        }
      }
      if (target < 0) {
        if (g.nodes.size() >= max_nodes)
          throw ResourceLimitError("orbit exceeds " + std::to_string(max_nodes) + " nodes");
        target = static_cast<int>(g.nodes.size());
        buckets[key].push_back(target);
        g.transversal.push_back(Sl2Word::letter(kLetters[li]) * g.transversal[i]);
        g.nodes.push_back(std::move(cand));
      }
      row[li] = target;
    }
    g.edges.push_back(row);
  }
  return g;
}

VeechGroup veech_generators(const OrbitGraph& g) {
  VeechGroup v;
  v.base = g.nodes.at(0);
  v.index = g.index();

  // Schreier generators: for the edge a * node_i = node_j the word
  // transversal_j^-1 * a * transversal_i stabilizes the base.
  std::vector<Sl2Matrix> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (std::size_t li = 0; li < kLetters.size(); ++li) {
      int j = g.edges[i][li];
      Sl2Word w = g.transversal[j].inverse() * Sl2Word::letter(kLetters[li]) *
                  g.transversal[i];
      Sl2Matrix m = word_to_matrix(w);
      if (m == Sl2Matrix::identity()) continue;
      if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
      seen.push_back(m);
      v.generator_words.push_back(std::move(w));
      v.generator_matrices.push_back(m);
    }
  }

  v.s_perm.resize(g.index());
  v.t_perm.resize(g.index());
  for (int i = 0; i < g.index(); ++i) {
    v.s_perm[i] = g.edges[i][0];
    v.t_perm[i] = g.edges[i][1];
  }
  auto [widths, level] = cusp_data(g);
  v.cusp_widths = std::move(widths);
  v.level = level;
  return v;
}

bool contains(const RegularOrigami& o, const Sl2Matrix& m) {
  if (m.det() != 1) throw std::invalid_argument("not an element of SL(2,Z)");
  RegularOrigami image = act_word(o, matrix_to_word(m));
  return pairs_equivalent(*o.group, o.x, o.y, image.x, image.y);
}

std::pair<std::vector<long long>, long long> cusp_data(const OrbitGraph& g) {
  std::vector<long long> widths;
  std::vector<char> seen(g.index(), 0);
  for (int i = 0; i < g.index(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      j = g.edges[j][1];  // letter T
    }
    widths.push_back(len);
  }
  std::sort(widths.rbegin(), widths.rend());
  long long level = 1;
  for (long long w : widths) level = std::lcm(level, w);
  return {widths, level};
}

}  // namespace origami
