#include <benchmark/benchmark.h>

#include "mcgfin/conj.hpp"
#include "mcgfin/finimg.hpp"
#include "mcgfin/orbit.hpp"

using namespace mcgfin;

namespace {

  FieldPtr cyclo(std::uint64_t m) {
    return NumberField::make(cyclotomic_polynomial(m), "z");
  }

  RepTuple dihedral(std::uint64_t m) {
    auto k = cyclo(m);
    auto z = FieldElement::generator(k);
    return RepTuple(GroupShape::free(2),
                    {Matrix::diagonal({z, z.inverse()}), Matrix::from_ints(k, {{0, 1}, {1, 0}})});
  }

  RepTuple unipotent_pair() {
    auto q = NumberField::rationals();
    return RepTuple(GroupShape::free(2),
                    {Matrix::from_ints(q, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                     Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})});
  }

}  // namespace

static void bm_field_multiply(benchmark::State& state) {
  auto k = cyclo(static_cast<std::uint64_t>(state.range(0)));
  auto a = FieldElement::generator(k) + FieldElement::from_int(k, 3);
  auto b = a.inverse();
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_field_multiply)->Arg(5)->Arg(12)->Arg(25);

static void bm_field_inverse(benchmark::State& state) {
  auto k = cyclo(static_cast<std::uint64_t>(state.range(0)));
  auto a = FieldElement::generator(k) + FieldElement::from_int(k, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(bm_field_inverse)->Arg(5)->Arg(12)->Arg(25);

static void bm_group_closure(benchmark::State& state) {
  auto rep = dihedral(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_closure(rep).count);
  }
}
BENCHMARK(bm_group_closure)->Arg(5)->Arg(12)->Arg(30);

static void bm_unipotent_orbit(benchmark::State& state) {
  auto rep   = unipotent_pair();
  auto moves = MoveSet::nielsen(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_orbit(rep, moves).class_count());
  }
}
BENCHMARK(bm_unipotent_orbit);

static void bm_dihedral_orbit(benchmark::State& state) {
  auto         rep   = dihedral(static_cast<std::uint64_t>(state.range(0)));
  auto         moves = MoveSet::nielsen(2);
  OrbitOptions o;
  o.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_orbit(rep, moves, {}, o).class_count());
  }
}
BENCHMARK(bm_dihedral_orbit)->Args({12, 1})->Args({12, 4});

static void bm_conjugacy(benchmark::State& state) {
  auto a = unipotent_pair();
  auto b = nielsen_move(a, Move::Twist);
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_conjugate(a, b).kind);
  }
}
BENCHMARK(bm_conjugacy);

BENCHMARK_MAIN();
