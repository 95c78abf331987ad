#pragma once

#include <functional>
#include <vector>

#include "ddbt/linalg.hpp"

namespace ddbt::kernels {

// Every parallel kernel has a serial reference with identical arithmetic
// order per output entry, so both policies return bit-identical results.
enum class Policy { Serial, Parallel };

// One dense semidefinite block of an SDP in the form C − Σ yᵢ Aᵢ ⪰ 0.
struct DenseBlock {
    Matrix C;
    std::vector<Index> vars;  // global indices of variables present in this block
    std::vector<Matrix> A;    // A[k] multiplies y[vars[k]]
};

// Adds Σ tr(Aᵢ X Aⱼ Z⁻¹) over the block's variable pairs into the Schur matrix M.
void addSchurBlock(const DenseBlock& block, const Matrix& X, const Matrix& Zinv, Matrix& M, Policy policy);

// max over the grid of the largest singular value of f(ω); returns the argmax index.
struct GridPeak {
    double value = 0.0;
    Index index = 0;
};
GridPeak gridMaximum(const std::vector<double>& grid, const std::function<double(double)>& f, Policy policy);

// Evaluates f(i) for i in [0, count) and stores the results in order.
void forEachIndex(Index count, const std::function<void(Index)>& f, Policy policy);

int maxThreads();

}  // namespace ddbt::kernels
