// Copyright 2026 The dosqtda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dosqtda/kernels.hpp"
#include "dosqtda/laplacian.hpp"

namespace {

using namespace dosqtda;

PauliSum random_sum(int n, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Mask> m(0, (Mask{1} << n) - 1);
    std::normal_distribution<double> g;
    PauliSum s(n);
    for (int i = 0; i < terms; ++i) s.add(PauliKey{m(rng), m(rng)}, g(rng));
    return s;
}

template <PauliSum (*Multiply)(const PauliSum&, const PauliSum&)>
void BM_Multiply(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    auto a = random_sum(12, terms, 1), b = random_sum(12, terms, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
    state.SetItemsProcessed(state.iterations() * terms * terms);
}
BENCHMARK(BM_Multiply<kernels::serial::multiply>)->Name("multiply/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_Multiply<kernels::parallel::multiply>)->Name("multiply/parallel")->Arg(64)->Arg(256);

template <void (*Apply)(std::span<cplx>, int, const kernels::Gate1q&), void (*Cnot)(std::span<cplx>, int, int)>
void BM_Layer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<cplx> psi(std::size_t{1} << n, cplx{0.0});
    psi[0] = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    const kernels::Gate1q h{cplx{r}, cplx{r}, cplx{r}, cplx{-r}};
    for (auto _ : state) {
        for (int q = 0; q < n; ++q) Apply(psi, q, h);
        for (int q = 0; q + 1 < n; ++q) Cnot(psi, q, q + 1);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (2 * n - 1) * static_cast<std::int64_t>(psi.size()));
}
BENCHMARK(BM_Layer<kernels::serial::apply_1q, kernels::serial::apply_cnot>)->Name("gate_layer/serial")->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_Layer<kernels::parallel::apply_1q, kernels::parallel::apply_cnot>)->Name("gate_layer/parallel")->Arg(12)->Arg(18)->Arg(22);

template <std::vector<std::optional<PauliKey>> (*Row)(std::span<const PauliKey>, std::size_t)>
void BM_CommutatorRow(benchmark::State& state) {
    const std::size_t size = static_cast<std::size_t>(state.range(0));
    auto s = random_sum(16, static_cast<int>(size), 3);
    std::vector<PauliKey> basis;
    for (const auto& [k, c] : s.terms()) basis.push_back(k);
    for (auto _ : state) benchmark::DoNotOptimize(Row(basis, basis.size() - 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size()));
}
BENCHMARK(BM_CommutatorRow<kernels::serial::commutator_row>)->Name("commutator_row/serial")->Arg(1024)->Arg(16384);
BENCHMARK(BM_CommutatorRow<kernels::parallel::commutator_row>)->Name("commutator_row/parallel")->Arg(1024)->Arg(16384);

void BM_Laplacian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Mask> gens;
    for (int v = 0; v + 2 < n; ++v) gens.push_back(Mask{7} << v);
    auto c = SimplicialComplex::from_maximal(n, gens);
    for (auto _ : state) benchmark::DoNotOptimize(combinatorial_laplacian(c, 1));
}
BENCHMARK(BM_Laplacian)->Name("laplacian/parallel_multiply")->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
