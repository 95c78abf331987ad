#include "ddbt/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ddbt::kernels {

namespace {

// tr(Aᵢ Gⱼ) with Aᵢ symmetric.
double traceProduct(const Matrix& Ai, const Matrix& Gj) { return Ai.cwiseProduct(Gj.transpose()).sum(); }

}  // namespace

void addSchurBlock(const DenseBlock& block, const Matrix& X, const Matrix& Zinv, Matrix& M, Policy policy) {
    const Index k = static_cast<Index>(block.vars.size());
    if (k == 0) return;
    std::vector<Matrix> G(k);
    Matrix local(k, k);
    if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (Index j = 0; j < k; ++j) G[j] = X * block.A[j] * Zinv;
#pragma omp parallel for schedule(dynamic)
        for (Index j = 0; j < k; ++j)
            for (Index i = 0; i <= j; ++i) local(i, j) = traceProduct(block.A[i], G[j]);
    } else {
        for (Index j = 0; j < k; ++j) G[j] = X * block.A[j] * Zinv;
        for (Index j = 0; j < k; ++j)
            for (Index i = 0; i <= j; ++i) local(i, j) = traceProduct(block.A[i], G[j]);
    }
    for (Index j = 0; j < k; ++j) {
        for (Index i = 0; i <= j; ++i) {
            M(block.vars[i], block.vars[j]) += local(i, j);
            if (i != j) M(block.vars[j], block.vars[i]) += local(i, j);
        }
    }
}

GridPeak gridMaximum(const std::vector<double>& grid, const std::function<double(double)>& f, Policy policy) {
    const Index n = static_cast<Index>(grid.size());
    std::vector<double> values(grid.size());
    if (policy == Policy::Parallel) {
#pragma omp parallel for
        for (Index i = 0; i < n; ++i) values[i] = f(grid[i]);
    } else {
        for (Index i = 0; i < n; ++i) values[i] = f(grid[i]);
    }
    GridPeak peak;
    for (Index i = 0; i < n; ++i) {
        if (values[i] > peak.value || i == 0) {
            peak.value = values[i];
            peak.index = i;
        }
    }
    return peak;
}

void forEachIndex(Index count, const std::function<void(Index)>& f, Policy policy) {
    if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (Index i = 0; i < count; ++i) f(i);
    } else {
        for (Index i = 0; i < count; ++i) f(i);
    }
}

int maxThreads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace ddbt::kernels
