#include <benchmark/benchmark.h>

#include "homconf/axioms.hpp"
#include "homconf/corpus.hpp"
#include "homconf/io.hpp"

using namespace homconf;

namespace {

Algebra random_algebra(std::size_t rank, int degree, Kind kind, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i) labels.push_back("e" + std::to_string(i + 1));
  return make_algebra("bench", FreeModule(labels), random_table(rng, rank, rank, rank, degree, 0.6),
                      Endomorphism::identity(rank), kind);
}

void BM_PolyMultiply(benchmark::State& state) {
  Rng rng(1);
  const int degree = static_cast<int>(state.range(0));
  std::vector<Var> vars = {Var::lambda(), Var::mu(), Var::d()};
  Poly p = random_poly(rng, vars, degree, 8), q = random_poly(rng, vars, degree, 8);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(1, 4);

void BM_Product(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  Algebra a = random_algebra(rank, 3, Kind::LeftSymmetric, 2);
  Element x = a.alpha.image_of_basis(0), y = a.alpha.image_of_basis(rank - 1);
  for (auto _ : state) benchmark::DoNotOptimize(product(a.product, x, y, -lam() - del()));
}
BENCHMARK(BM_Product)->DenseRange(1, 4);

void BM_LeftSymmetry(benchmark::State& state) {
  Algebra a = random_algebra(static_cast<std::size_t>(state.range(0)), 3, Kind::LeftSymmetric, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_left_symmetry(a));
}
BENCHMARK(BM_LeftSymmetry)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HomJacobi(benchmark::State& state) {
  Algebra a = random_algebra(static_cast<std::size_t>(state.range(0)), 3, Kind::Lie, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_hom_jacobi(a));
}
BENCHMARK(BM_HomJacobi)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ParseDefinition(benchmark::State& state) {
  DefinitionFile f;
  f.algebras.push_back(random_algebra(static_cast<std::size_t>(state.range(0)), 3, Kind::LeftSymmetric, 5));
  const std::string text = print_definition(f);
  for (auto _ : state) benchmark::DoNotOptimize(parse_definition(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDefinition)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
