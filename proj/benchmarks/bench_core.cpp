#include <benchmark/benchmark.h>

#include "origami/congruence.hpp"
#include "origami/cylinders.hpp"
#include "origami/families.hpp"
#include "origami/veech.hpp"

using namespace origami;

namespace {

const RegularOrigami& a5() {
  static const RegularOrigami o = alternating_origami(5);
  return o;
}

const RegularOrigami& psl27() {
  static const RegularOrigami o = [] {
    auto g = psl2_group(7);
    auto pair = abc_search(*g, 2, 3, 7);
    return make_regular_origami(g, pair->second, pair->first);
  }();
  return o;
}

void bm_closure_a5(benchmark::State& state) {
  Perm x = Perm::from_cycles(5, {{1, 2, 3}});
  Perm y = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  for (auto _ : state)
    benchmark::DoNotOptimize(PermGroup::closure(5, {x, y}).order());
}
BENCHMARK(bm_closure_a5);

void bm_closure_psl27(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(psl2_group(7)->order());
}
BENCHMARK(bm_closure_psl27);

void bm_pairs_equivalent_hit(benchmark::State& state) {
  const RegularOrigami& o = a5();
  Perm c = o.group->element(17);
  Perm x2 = c * o.x * c.inverse(), y2 = c * o.y * c.inverse();
  for (auto _ : state)
    benchmark::DoNotOptimize(pairs_equivalent(*o.group, o.x, o.y, x2, y2));
}
BENCHMARK(bm_pairs_equivalent_hit);

void bm_pairs_equivalent_miss(benchmark::State& state) {
  const RegularOrigami& o = a5();
  RegularOrigami other = act_word(o, Sl2Word::parse("TS"));
  for (auto _ : state)
    benchmark::DoNotOptimize(pairs_equivalent(*o.group, o.x, o.y, other.x, other.y));
}
BENCHMARK(bm_pairs_equivalent_miss);

void bm_orbit_a5(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit(a5()).index());
}
BENCHMARK(bm_orbit_a5);

void bm_cylinders_psl27(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cylinders_in_direction(psl27(), 3).cylinders.size());
}
BENCHMARK(bm_cylinders_psl27);

void bm_contains_psl27(benchmark::State& state) {
  Sl2Matrix m{1, (psl27().x).order(), 0, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(contains(psl27(), m));
}
BENCHMARK(bm_contains_psl27);

void bm_surjects_mod_24(benchmark::State& state) {
  static const VeechGroup v = veech_generators(orbit(a5()));
  for (auto _ : state)
    benchmark::DoNotOptimize(surjects_mod_n(v, 24));
}
BENCHMARK(bm_surjects_mod_24);

void bm_matrix_to_word(benchmark::State& state) {
  Sl2Matrix m{19, 8, 7, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(matrix_to_word(m).size());
}
BENCHMARK(bm_matrix_to_word);

}  // namespace

BENCHMARK_MAIN();
