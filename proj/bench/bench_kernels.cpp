// Serial reference kernels against their OpenMP counterparts.
// Run: ./build/bench/ontic_bench  (OMP_NUM_THREADS controls the team size)

#include <random>

#include <benchmark/benchmark.h>

#include "ontic/kernels.hpp"
#include "ontic/ontology.hpp"

namespace {

using namespace ontic;

DenseOperator random_operator(int n_sites) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  const auto dim = static_cast<Eigen::Index>(basis_dim(n_sites));
  DenseOperator m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

std::vector<kernels::MaskedTerm> random_terms(int n_sites, int count) {
  std::mt19937_64 rng(2);
  std::vector<kernels::MaskedTerm> terms;
  for (int k = 0; k < count; ++k) {
    auto t = kernels::decode_string(rng() % (std::size_t{1} << (2 * n_sites)), n_sites);
    t.coefficient = Complex(1.0, 0.5);
    terms.push_back(t);
  }
  return terms;
}

template <auto Kernel>
void projection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseOperator m = random_operator(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, n));
}

template <auto Kernel>
void accumulate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto terms = random_terms(n, 64);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms, n));
}

template <auto Sweep>
void sweep(benchmark::State& state) {
  std::vector<double> eps;
  for (int k = 1; k <= state.range(0); ++k) eps.push_back(0.5 * k / static_cast<double>(state.range(0)));
  const std::vector<BasisIndex> sources = {0, 1, 2, 3, 4, 5, 6, 7};
  const auto gen = LeakageGenerator::hamiltonian();
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(gen, eps, sources));
}

}  // namespace

BENCHMARK(projection<kernels::serial::pauli_projection>)->Name("pauli_projection/serial")->DenseRange(4, 7);
BENCHMARK(projection<kernels::parallel::pauli_projection>)->Name("pauli_projection/omp")->DenseRange(4, 7);
BENCHMARK(accumulate<kernels::serial::pauli_accumulate>)->Name("pauli_accumulate/serial")->DenseRange(6, 10, 2);
BENCHMARK(accumulate<kernels::parallel::pauli_accumulate>)->Name("pauli_accumulate/omp")->DenseRange(6, 10, 2);
BENCHMARK(sweep<ontic::leakage_sweep_serial>)->Name("leakage_sweep/serial")->Arg(64);
BENCHMARK(sweep<ontic::leakage_sweep>)->Name("leakage_sweep/omp")->Arg(64);

BENCHMARK_MAIN();
