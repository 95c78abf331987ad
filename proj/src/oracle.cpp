#include "ddbt/oracle.hpp"

#include <string>

#include "ddbt/errors.hpp"

namespace ddbt::oracle {

namespace {

constexpr Index kKroneckerLimit = 30;

Matrix lyapResidual(const Matrix& A, const Matrix& X, const Matrix& W) {
    return A * X * A.transpose() - X + W;
}

Matrix kroneckerSolve(const Matrix& A, const Matrix& W) {
    const Index n = A.rows();
    Matrix K = Matrix::Identity(n * n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) K.block(i * n, j * n, n, n) -= A(i, j) * A;
    // vec is column-major: vec(A X Aᵀ) = (A ⊗ A) vec X.
    const Vector rhs = Eigen::Map<const Vector>(W.data(), n * n);
    const Vector x = K.partialPivLu().solve(rhs);
    return Eigen::Map<const Matrix>(x.data(), n, n);
}

// Squared Smith iteration: X = Σ_k A^k W A^kᵀ, doubling the horizon each step.
Matrix smithSolve(const Matrix& A, const Matrix& W) {
    Matrix X = W, Ak = A;
    for (int it = 0; it < 100; ++it) {
        const Matrix dX = Ak * X * Ak.transpose();
        X += dX;
        Ak = Ak * Ak;
        if (dX.norm() <= 1e-17 * X.norm()) break;
    }
    return X;
}

}  // namespace

Matrix solveDiscreteLyapunov(const Matrix& A, const Matrix& Wrhs) {
    if (A.rows() != A.cols() || Wrhs.rows() != A.rows() || Wrhs.cols() != A.cols())
        throw DimensionMismatch("solveDiscreteLyapunov: shape mismatch");
    linalg::requireSymmetric(Wrhs, "Lyapunov right-hand side");
    const double rho = linalg::spectralRadius(A);
    if (rho >= 1.0) throw Unstable("solveDiscreteLyapunov: spectral radius " + std::to_string(rho) + " >= 1");
    const Matrix W = linalg::symmetrize(Wrhs);
    Matrix X = A.rows() <= kKroneckerLimit ? kroneckerSolve(A, W) : smithSolve(A, W);
    X = linalg::symmetrize(X);
    // One step of iterative refinement, then gate on the residual.
    Matrix res = lyapResidual(A, X, W);
    if (A.rows() <= kKroneckerLimit) X = linalg::symmetrize(X + kroneckerSolve(A, linalg::symmetrize(res)));
    res = lyapResidual(A, X, W);
    if (res.norm() > 1e-10 * (X.norm() + W.norm()))
        throw Error("solveDiscreteLyapunov: residual check failed");
    return X;
}

OrdinaryGramians ordinaryGramians(const StateSpaceModel& model) {
    model.validate();
    return {solveDiscreteLyapunov(model.A, model.B * model.B.transpose()),
            solveDiscreteLyapunov(model.A.transpose(), model.C.transpose() * model.C)};
}

OrdinaryTruncation ordinaryBalancedTruncation(const StateSpaceModel& model, Index r) {
    const OrdinaryGramians g = ordinaryGramians(model);
    OrdinaryTruncation out;
    out.balancing = balancing::balanceFromGramians(g.P0, g.Q0);
    out.rom = balancing::truncateModel(model, out.balancing, r);
    return out;
}

StateSpaceModel builtinTrueSystem() {
    StateSpaceModel s;
    s.A.resize(6, 6);
    s.A << 0.9299, 0.4160, 0.7447, 0.2291, 0.2452, 0.0592,
        -0.1869, 0.7430, 0.3318, 0.7617, 1.0859, 0.3560,
        0.0380, 0.0477, -0.3644, 0.0647, 0.1370, 0.0766,
        0.0169, 0.0549, -0.0972, -0.3693, -0.8685, 0.0484,
        0.0250, 0.0285, 0.2741, 0.1393, -0.0474, 0.1615,
        0.1108, 0.1358, -1.7370, 0.1855, -1.8002, -0.2311;
    s.B.resize(6, 1);
    s.B << 0.0701, 0.1869, -0.0380, -0.0169, -0.0250, -0.1108;
    s.C = Matrix::Zero(1, 6);
    s.C(0, 0) = 1.0;
    s.D = Matrix::Zero(1, 1);
    return s;
}

}  // namespace ddbt::oracle
