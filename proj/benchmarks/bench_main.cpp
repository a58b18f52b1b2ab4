#include <benchmark/benchmark.h>

#include <random>

#include "holant/corpus.hpp"
#include "holant/families.hpp"
#include "holant/gauss_sum.hpp"
#include "holant/grid.hpp"
#include "holant/solvers.hpp"

using namespace holant;
using namespace holant::corpus;

namespace {

SignatureGrid code_ring(int copies) {
    // ring of code signatures: "+" ports of one copy matched to "-" ports
    // of the next
    SignatureGrid g;
    std::vector<int> vs;
    for (int k = 0; k < copies; ++k) vs.push_back(g.add_vertex(gen_f7_alpha_pm()));
    for (int k = 0; k < copies; ++k)
        for (int p = 0; p < 7; ++p) g.connect(vs[k], p, vs[(k + 1) % copies], 7 + p);
    return g;
}

void bm_cyc8_mul(benchmark::State& state) {
    Cyc8 a = Cyc8(3) + Cyc8(2) * Cyc8::alpha() - Cyc8::alpha_pow(3);
    Cyc8 b = Cyc8(1) - Cyc8::i() + Cyc8(5) * Cyc8::alpha_pow(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_cyc8_mul);

void bm_gf2_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    Gf2System sys(n);
    for (int r = 0; r < n / 2; ++r) {
        Gf2Vec row = gf2_zero(n);
        for (int j = 0; j < n; ++j)
            if (rng() & 1) gf2_flip(row, j);
        sys.add_row(row, rng() & 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.solve());
    }
}
BENCHMARK(bm_gf2_solve)->Arg(64)->Arg(256);

void bm_gauss_sum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    QuadExponent e(n);
    for (int j = 0; j < n; ++j) e.add_linear(j, static_cast<int>(rng() % 4));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (rng() & 1) e.add_quad(j, k);
    Gf2System sys(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum_eval(e, sys));
    }
}
BENCHMARK(bm_gauss_sum)->Arg(16)->Arg(48);

void bm_brute_vs_local(benchmark::State& state) {
    SignatureGrid g = code_ring(static_cast<int>(state.range(0)));
    const bool local = state.range(1) != 0;
    for (auto _ : state) {
        if (local)
            benchmark::DoNotOptimize(solve_local_affine_grid(g));
        else
            benchmark::DoNotOptimize(holant_brute(g, 1 << 12));
    }
}
BENCHMARK(bm_brute_vs_local)->Args({2, 0})->Args({2, 1})->Args({4, 0})->Args({4, 1});

void bm_membership(benchmark::State& state) {
    Signature f = gen_f_chain(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_local_affine(f).ok);
    }
}
BENCHMARK(bm_membership);

}  // namespace

BENCHMARK_MAIN();
