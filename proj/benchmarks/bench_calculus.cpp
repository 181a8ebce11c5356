#include <random>

#include <benchmark/benchmark.h>

#include "engeltori/catalog.hpp"
#include "engeltori/chain_complex.hpp"
#include "engeltori/smith.hpp"
#include "engeltori/torus.hpp"

using namespace engeltori;

namespace {

homology::IntMatrix dense_matrix(int rows, int cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    homology::IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = entry(gen);
    return m;
}

// (sigma_1 ... sigma_5)^7 on six strands closes to the (6,7) torus knot.
knots::BraidWord torus_knot_braid() {
    knots::BraidWord b{6, {}};
    for (int rep = 0; rep < 7; ++rep)
        for (int g = 1; g <= 5; ++g) b.word.push_back(g);
    return b;
}

void BM_smith_normal_form(benchmark::State& state) {
    const auto a = dense_matrix(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto s = homology::smith_normal_form(a);
        benchmark::DoNotOptimize(s.d);
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8)->Arg(12);

void BM_homology_of_product(benchmark::State& state) {
    const auto torus = catalog::get("torus2").complex;
    const auto product = homology::tensor_product(torus, torus);
    for (auto _ : state) {
        auto h = homology::homology(product);
        benchmark::DoNotOptimize(h.groups);
    }
}
BENCHMARK(BM_homology_of_product);

void BM_tensor_product(benchmark::State& state) {
    const auto torus = catalog::get("torus2").complex;
    for (auto _ : state) {
        auto t = homology::tensor_product(torus, torus);
        benchmark::DoNotOptimize(t.boundaries);
    }
}
BENCHMARK(BM_tensor_product);

void BM_wirtinger_spine(benchmark::State& state) {
    const auto braid = torus_knot_braid();
    for (auto _ : state) {
        auto spine = catalog::wirtinger_spine(braid);
        benchmark::DoNotOptimize(spine.boundaries);
    }
}
BENCHMARK(BM_wirtinger_spine);

void BM_theorem_family(benchmark::State& state) {
    const knots::BraidWord unknot{1, {}};
    for (auto _ : state) {
        auto report = tori::theorem_family(unknot, 10);
        benchmark::DoNotOptimize(report.pairs);
    }
}
BENCHMARK(BM_theorem_family);

}  // namespace

BENCHMARK_MAIN();
