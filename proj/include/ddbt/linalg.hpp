#pragma once

#include <Eigen/Dense>

namespace ddbt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Inertia {
    Index nNeg = 0;
    Index nZero = 0;
    Index nPos = 0;
    bool operator==(const Inertia&) const = default;
};

namespace linalg {

// Relative symmetry tolerance: ‖M − Mᵀ‖ must stay below symTolFactor·‖M‖_F.
inline constexpr double symTolFactor = 1e-10;

// Throws NotSymmetric if M is not square and symmetric up to symTolFactor·‖M‖_F.
void requireSymmetric(const Matrix& M, const char* what = "matrix");
Matrix symmetrize(const Matrix& M);

double norm2(const Matrix& M);
// Spectral norm of a symmetric matrix (largest |eigenvalue|).
double symNorm2(const Matrix& M);
Vector symEigenvalues(const Matrix& M);
double minEigenvalue(const Matrix& M);
double maxEigenvalue(const Matrix& M);

// Default zero threshold for inertia: the floating-point noise floor of a
// symmetric eigensolver, 100·dim·eps·‖M‖₂.
double defaultZeroTol(const Matrix& M);

// zeroTol < 0 selects defaultZeroTol(M).
Inertia inertia(const Matrix& M, double zeroTol = -1.0);
Matrix schurComplement(const Matrix& M, Index split);
bool isPosDef(const Matrix& M, double margin = 0.0);
Matrix symSqrt(const Matrix& M);
// Inverse square root of a positive definite matrix.
Matrix symInvSqrt(const Matrix& M);
double spectralRadius(const Matrix& A);

// Orthonormal basis of the orthogonal complement of range(W) (W full column rank).
Matrix orthonormalComplement(const Matrix& W);
Index numericalRank(const Matrix& M, double relTol = 1e-10);
Matrix blkdiag(const Matrix& A, const Matrix& B);

}  // namespace linalg
}  // namespace ddbt
