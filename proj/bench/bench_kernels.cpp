// Serial reference vs OpenMP variants of the parallel kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "ddbt/bounds.hpp"
#include "ddbt/kernels.hpp"
#include "ddbt/oracle.hpp"
#include "ddbt/pipeline.hpp"

using namespace ddbt;

namespace {

kernels::Policy policyOf(const benchmark::State& st) {
    return st.range(0) ? kernels::Policy::Parallel : kernels::Policy::Serial;
}

Matrix randomSym(std::mt19937_64& rng, Index n) {
    std::normal_distribution<double> nd;
    Matrix G(n, n);
    for (Index i = 0; i < G.size(); ++i) G.data()[i] = nd(rng);
    return 0.5 * (G + G.transpose());
}

void BM_SchurAssembly(benchmark::State& st) {
    std::mt19937_64 rng(1);
    const Index dim = st.range(1), vars = st.range(2);
    kernels::DenseBlock blk;
    blk.C = randomSym(rng, dim);
    for (Index k = 0; k < vars; ++k) {
        blk.vars.push_back(k);
        blk.A.push_back(randomSym(rng, dim));
    }
    const Matrix X = randomSym(rng, dim) + dim * Matrix::Identity(dim, dim);
    const Matrix Zinv = randomSym(rng, dim) + dim * Matrix::Identity(dim, dim);
    for (auto _ : st) {
        Matrix M = Matrix::Zero(vars, vars);
        kernels::addSchurBlock(blk, X, Zinv, M, policyOf(st));
        benchmark::DoNotOptimize(M.data());
    }
}
// {policy, block dimension, variables}: the a priori LMI block at n = 6, r = 3 has dimension 22 and 49 variables.
BENCHMARK(BM_SchurAssembly)->ArgsProduct({{0, 1}, {22, 60}, {49, 200}})->Unit(benchmark::kMicrosecond);

void BM_FrequencyGrid(benchmark::State& st) {
    const StateSpaceModel s = oracle::builtinTrueSystem();
    for (auto _ : st) benchmark::DoNotOptimize(bounds::gridPeak(s, st.range(1), policyOf(st)));
}
BENCHMARK(BM_FrequencyGrid)->ArgsProduct({{0, 1}, {1024, 65536}})->Unit(benchmark::kMicrosecond);

void BM_SigmaSweep(benchmark::State& st) {
    ExperimentConfig cfg;
    PipelineOptions opts;
    opts.apriori = false;
    for (auto _ : st) {
        const auto reps = pipeline::sweep(cfg, {0.002, 0.01, 0.03, 0.05}, opts, policyOf(st));
        benchmark::DoNotOptimize(reps.data());
    }
}
BENCHMARK(BM_SigmaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
