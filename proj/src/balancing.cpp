#include "ddbt/balancing.hpp"

#include <algorithm>

#include "ddbt/errors.hpp"

namespace ddbt {

std::vector<Index> BalancingResult::boundaries() const {
    std::vector<Index> out;
    Index acc = 0;
    for (Index m : multiplicities) out.push_back(acc += m);
    return out;
}

Index BalancingResult::groupsRetained(Index r) const {
    const auto b = boundaries();
    const auto it = std::find(b.begin(), b.end(), r);
    return it == b.end() ? -1 : static_cast<Index>(it - b.begin()) + 1;
}

namespace balancing {

namespace {

Matrix lowerFactor(const Matrix& M, const char* name) {
    linalg::requireSymmetric(M, name);
    Eigen::LLT<Matrix> llt(linalg::symmetrize(M));
    if (llt.info() != Eigen::Success || !linalg::isPosDef(M))
        throw NotPD(std::string("balanceFromGramians: ") + name + " is not positive definite");
    return llt.matrixL();
}

}  // namespace

BalancingResult balanceFromGramians(const Matrix& P, const Matrix& Q, double groupTol) {
    if (P.rows() != Q.rows() || P.cols() != Q.cols())
        throw DimensionMismatch("balanceFromGramians: P and Q differ in size");
    const Matrix LP = lowerFactor(P, "P");
    const Matrix LQ = lowerFactor(Q, "Q");
    const Index n = P.rows();

    Eigen::JacobiSVD<Matrix> svd(LQ.transpose() * LP, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix U = svd.matrixU(), V = svd.matrixV();
    const Vector s = svd.singularValues();
    // Deterministic signs: first nonzero entry of each right singular vector positive.
    for (Index j = 0; j < n; ++j) {
        const double tol = 1e-12 * V.col(j).cwiseAbs().maxCoeff();
        for (Index i = 0; i < n; ++i) {
            if (std::abs(V(i, j)) > tol) {
                if (V(i, j) < 0) {
                    V.col(j) *= -1.0;
                    U.col(j) *= -1.0;
                }
                break;
            }
        }
    }
    const Vector isq = s.cwiseSqrt().cwiseInverse();

    BalancingResult bal;
    bal.T = isq.asDiagonal() * U.transpose() * LQ.transpose();
    bal.Tinv = LP * V * isq.asDiagonal();
    bal.hsv = s;
    Index count = 1;
    for (Index i = 0; i + 1 < n; ++i) {
        if ((s(i) - s(i + 1)) / s(0) < groupTol) {
            ++count;
        } else {
            bal.multiplicities.push_back(count);
            count = 1;
        }
    }
    bal.multiplicities.push_back(count);
    return bal;
}

void requireBoundary(const BalancingResult& bal, Index r) {
    if (bal.groupsRetained(r) > 0) return;
    const auto b = bal.boundaries();
    Index lower = 0, upper = b.back();
    for (Index v : b) {
        if (v < r) lower = v;
        if (v > r) {
            upper = v;
            break;
        }
    }
    throw MultiplicitySplit(static_cast<int>(r), static_cast<int>(lower), static_cast<int>(upper));
}

StateSpaceModel truncateModel(const StateSpaceModel& model, const BalancingResult& bal, Index r) {
    model.validate();
    if (model.n() != bal.T.rows()) throw DimensionMismatch("truncateModel: model order differs from T");
    requireBoundary(bal, r);
    const Matrix What = bal.T.transpose().leftCols(r);
    const Matrix Vhat = bal.Tinv.leftCols(r);
    return {What.transpose() * model.A * Vhat, What.transpose() * model.B, model.C * Vhat, model.D};
}

ReductionSetup buildReductionSetup(const QmiSet& N, const BalancingResult& bal, Index r, const Dims& dims) {
    if (N.rowDim() != dims.n + dims.p || N.colDim() != dims.n + dims.m)
        throw DimensionMismatch("buildReductionSetup: N does not match the dimensions");
    if (bal.T.rows() != dims.n) throw DimensionMismatch("buildReductionSetup: T does not match n");
    requireBoundary(bal, r);
    ReductionSetup rs;
    rs.r = r;
    rs.ell = bal.groupsRetained(r);
    rs.What = bal.T.transpose().leftCols(r);
    rs.Vhat = bal.Tinv.leftCols(r);
    rs.proj.W = linalg::blkdiag(rs.What, Matrix::Identity(dims.p, dims.p));
    rs.proj.V = linalg::blkdiag(rs.Vhat, Matrix::Identity(dims.m, dims.m));
    rs.Nred = qmi::reduce(N, rs.proj);
    return rs;
}

double classicalBound(const BalancingResult& bal, Index r) {
    requireBoundary(bal, r);
    return 2.0 * bal.hsv.tail(bal.hsv.size() - r).sum();
}

}  // namespace balancing
}  // namespace ddbt
