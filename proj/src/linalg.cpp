#include "ddbt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ddbt/errors.hpp"

namespace ddbt::linalg {

namespace {

constexpr double kRcondCap = 1e-14;

Eigen::SelfAdjointEigenSolver<Matrix> eigh(const Matrix& M, bool vectors) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        symmetrize(M), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    return es;
}

}  // namespace

void requireSymmetric(const Matrix& M, const char* what) {
    if (M.rows() != M.cols())
        throw NotSymmetric(std::string(what) + " is not square");
    if (!M.allFinite()) throw NotSymmetric(std::string(what) + " has non-finite entries");
    const double asym = (M - M.transpose()).norm();
    if (asym > symTolFactor * M.norm())
        throw NotSymmetric(std::string(what) + " is not symmetric (asymmetry " +
                           std::to_string(asym) + ")");
}

Matrix symmetrize(const Matrix& M) { return 0.5 * (M + M.transpose()); }

double norm2(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()(0);
}

double symNorm2(const Matrix& M) {
    if (M.rows() == 0) return 0.0;
    const Vector ev = eigh(M, false).eigenvalues();
    return std::max(-ev(0), ev(ev.size() - 1));
}

Vector symEigenvalues(const Matrix& M) {
    requireSymmetric(M);
    if (M.rows() == 0) return Vector();
    return eigh(M, false).eigenvalues();
}

double minEigenvalue(const Matrix& M) {
    if (M.rows() == 0) return std::numeric_limits<double>::infinity();
    return symEigenvalues(M)(0);
}

double maxEigenvalue(const Matrix& M) {
    if (M.rows() == 0) return -std::numeric_limits<double>::infinity();
    const Vector ev = symEigenvalues(M);
    return ev(ev.size() - 1);
}

double defaultZeroTol(const Matrix& M) {
    const double eps = std::numeric_limits<double>::epsilon();
    return 100.0 * static_cast<double>(M.rows()) * eps * symNorm2(M);
}

Inertia inertia(const Matrix& M, double zeroTol) {
    const Vector ev = symEigenvalues(M);
    if (zeroTol < 0) zeroTol = defaultZeroTol(M);
    Inertia in;
    for (Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -zeroTol)
            ++in.nNeg;
        else if (ev(i) > zeroTol)
            ++in.nPos;
        else
            ++in.nZero;
    }
    return in;
}

Matrix schurComplement(const Matrix& M, Index split) {
    requireSymmetric(M);
    if (split < 0 || split > M.rows()) throw DimensionMismatch("schurComplement: bad split index");
    const Index q = M.rows() - split;
    const Matrix S = symmetrize(M);
    if (q == 0) return S;
    const Matrix M12 = S.topRightCorner(split, q);
    const Matrix M22 = S.bottomRightCorner(q, q);
    // Pivoted LDLᵀ handles definite and semidefinite blocks; fall back to LU otherwise.
    Eigen::LDLT<Matrix> ldlt(M22);
    Matrix X;
    if (ldlt.info() == Eigen::Success && ldlt.rcond() > kRcondCap) {
        X = ldlt.solve(M12.transpose());
    } else {
        Eigen::FullPivLU<Matrix> lu(M22);
        if (lu.rcond() <= kRcondCap) throw SingularBlock("schurComplement: lower-right block is singular");
        X = lu.solve(M12.transpose());
    }
    return symmetrize(S.topLeftCorner(split, split) - M12 * X);
}

bool isPosDef(const Matrix& M, double margin) {
    if (M.rows() == 0) return true;
    return minEigenvalue(M) > margin;
}

Matrix symSqrt(const Matrix& M) {
    requireSymmetric(M);
    if (M.rows() == 0) return M;
    const auto es = eigh(M, true);
    Vector ev = es.eigenvalues();
    const double tol = defaultZeroTol(M);
    if (ev(0) < -tol) throw NotPSD("symSqrt: matrix is indefinite (min eigenvalue " + std::to_string(ev(0)) + ")");
    ev = ev.cwiseMax(0.0).cwiseSqrt();
    const Matrix& U = es.eigenvectors();
    return symmetrize(U * ev.asDiagonal() * U.transpose());
}

Matrix symInvSqrt(const Matrix& M) {
    requireSymmetric(M);
    const auto es = eigh(M, true);
    const Vector ev = es.eigenvalues();
    if (ev.size() > 0 && ev(0) <= 0) throw NotPD("symInvSqrt: matrix is not positive definite");
    const Matrix& U = es.eigenvectors();
    return symmetrize(U * ev.cwiseSqrt().cwiseInverse().asDiagonal() * U.transpose());
}

double spectralRadius(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("spectralRadius: matrix is not square");
    if (A.rows() == 0) return 0.0;
    Eigen::EigenSolver<Matrix> es(A, false);
    if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix orthonormalComplement(const Matrix& W) {
    const Index p = W.rows(), r = W.cols();
    if (r > p) throw DimensionMismatch("orthonormalComplement: more columns than rows");
    Eigen::HouseholderQR<Matrix> qr(W);
    const Matrix Qfull = qr.householderQ() * Matrix::Identity(p, p);
    return Qfull.rightCols(p - r);
}

Index numericalRank(const Matrix& M, double relTol) {
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(M);
    const Vector s = svd.singularValues();
    if (s(0) == 0.0) return 0;
    Index rank = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > relTol * s(0)) ++rank;
    return rank;
}

Matrix blkdiag(const Matrix& A, const Matrix& B) {
    Matrix R = Matrix::Zero(A.rows() + B.rows(), A.cols() + B.cols());
    R.topLeftCorner(A.rows(), A.cols()) = A;
    R.bottomRightCorner(B.rows(), B.cols()) = B;
    return R;
}

}  // namespace ddbt::linalg
