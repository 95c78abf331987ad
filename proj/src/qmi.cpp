#include "ddbt/qmi.hpp"

#include <string>

#include "ddbt/errors.hpp"

namespace ddbt {

QmiSet::QmiSet(const Matrix& psi, Index rowDim, Index colDim) : p_(rowDim), q_(colDim) {
    if (rowDim <= 0 || colDim <= 0) throw DimensionMismatch("QmiSet: block dimensions must be positive");
    if (psi.rows() != rowDim + colDim || psi.cols() != rowDim + colDim)
        throw DimensionMismatch("QmiSet: psi is " + std::to_string(psi.rows()) + "x" +
                                std::to_string(psi.cols()) + ", expected " +
                                std::to_string(rowDim + colDim));
    linalg::requireSymmetric(psi, "psi");
    psi_ = linalg::symmetrize(psi);
}

double QmiSet::norm() const { return linalg::symNorm2(psi_); }

namespace qmi {

namespace {

// Pieces of a regular set that every transformation needs.
struct Parts {
    Matrix psi12;
    Eigen::LLT<Matrix> negPsi22;  // factor of −Ψ22 ≻ 0
    Matrix H;                     // Ψ12 Ψ22⁻¹
    Matrix S;                     // Ψ|Ψ22
};

Parts parts(const QmiSet& set) {
    Parts pt;
    pt.psi12 = set.psi12();
    pt.negPsi22.compute(-set.psi22());
    if (pt.negPsi22.info() != Eigen::Success)
        throw RegularityFailure("lower-right block is not negative definite");
    pt.H = -pt.negPsi22.solve(pt.psi12.transpose()).transpose();
    pt.S = linalg::symmetrize(set.psi11() - pt.H * pt.psi12.transpose());
    return pt;
}

void requireFullColumnRank(const Matrix& W, Index rows, const char* name) {
    if (W.rows() != rows) throw DimensionMismatch(std::string(name) + " has wrong number of rows");
    if (W.cols() == 0 || W.cols() > rows || linalg::numericalRank(W) < W.cols())
        throw RankDeficient(std::string(name) + " is not full column rank");
}

// Column reduction: members {Z V : Z ∈ set}.
QmiSet reduceCols(const QmiSet& set, const Matrix& V) {
    const Parts pt = parts(set);
    // Ψ22⁻¹ V = −(−Ψ22)⁻¹ V
    const Matrix iV = -pt.negPsi22.solve(V);
    const Matrix VtiV = linalg::symmetrize(V.transpose() * iV);  // ≺ 0
    Eigen::LLT<Matrix> negG(-VtiV);
    if (negG.info() != Eigen::Success) throw RankDeficient("V'Psi22^{-1}V is singular");
    const Matrix G = linalg::symmetrize(-negG.solve(Matrix::Identity(V.cols(), V.cols())));
    const Matrix HVG = pt.psi12 * iV * G;  // Ψ12 Ψ22⁻¹ V G
    const Index p = set.rowDim(), qh = V.cols();
    Matrix out(p + qh, p + qh);
    out.topLeftCorner(p, p) = pt.S + HVG * VtiV * HVG.transpose();
    out.topRightCorner(p, qh) = HVG;
    out.bottomLeftCorner(qh, p) = HVG.transpose();
    out.bottomRightCorner(qh, qh) = G;
    return QmiSet(linalg::symmetrize(out), p, qh);
}

}  // namespace

Matrix memberResidual(const QmiSet& set, const Matrix& Z) {
    if (Z.rows() != set.rowDim() || Z.cols() != set.colDim())
        throw DimensionMismatch("memberResidual: Z is " + std::to_string(Z.rows()) + "x" +
                                std::to_string(Z.cols()) + ", expected " +
                                std::to_string(set.rowDim()) + "x" + std::to_string(set.colDim()));
    const Matrix P12Zt = set.psi12() * Z.transpose();
    return linalg::symmetrize(set.psi11() + P12Zt + P12Zt.transpose() +
                              Z * set.psi22() * Z.transpose());
}

double membershipTolerance(const QmiSet& set) { return 1e-8 * (1.0 + set.norm()); }

bool isMember(const QmiSet& set, const Matrix& Z, double tol) {
    if (tol < 0) tol = membershipTolerance(set);
    return linalg::minEigenvalue(memberResidual(set, Z)) >= -tol;
}

bool checkRegularity(const QmiSet& set) {
    const double tol = linalg::defaultZeroTol(set.psi());
    if (linalg::maxEigenvalue(set.psi22()) >= -tol) return false;
    return linalg::minEigenvalue(linalg::schurComplement(set.psi(), set.rowDim())) > tol;
}

void requireRegular(const QmiSet& set, const char* who) {
    if (!checkRegularity(set))
        throw RegularityFailure(std::string(who) +
                                ": QMI set is not regular (need Psi22 < 0 and Psi|Psi22 > 0)");
}

bool checkSlaterByInertia(const QmiSet& set) {
    const Inertia in = linalg::inertia(set.psi());
    return in == Inertia{set.colDim(), 0, set.rowDim()};
}

QmiSet dual(const QmiSet& set) {
    if (linalg::inertia(set.psi()).nZero != 0) throw SingularPsi("dual: psi is singular");
    const Index p = set.rowDim(), q = set.colDim();
    Eigen::PartialPivLU<Matrix> lu(set.psi());
    const Matrix inv = linalg::symmetrize(lu.inverse());
    Matrix out(q + p, q + p);
    out.topLeftCorner(q, q) = -inv.bottomRightCorner(q, q);
    out.topRightCorner(q, p) = inv.topRightCorner(p, q).transpose();
    out.bottomLeftCorner(p, q) = inv.topRightCorner(p, q);
    out.bottomRightCorner(p, p) = -inv.topLeftCorner(p, p);
    return QmiSet(linalg::symmetrize(out), q, p);
}

QmiSet projectRows(const QmiSet& set, const Matrix& W) {
    requireRegular(set, "projectRows");
    requireFullColumnRank(W, set.rowDim(), "W");
    const Index r = W.cols(), q = set.colDim();
    Matrix out(r + q, r + q);
    out.topLeftCorner(r, r) = W.transpose() * set.psi11() * W;
    out.topRightCorner(r, q) = W.transpose() * set.psi12();
    out.bottomLeftCorner(q, r) = out.topRightCorner(r, q).transpose();
    out.bottomRightCorner(q, q) = set.psi22();
    return QmiSet(linalg::symmetrize(out), r, q);
}

QmiSet reduce(const QmiSet& set, const ProjectionPair& proj) {
    requireRegular(set, "reduce");
    requireFullColumnRank(proj.W, set.rowDim(), "W");
    requireFullColumnRank(proj.V, set.colDim(), "V");
    return projectRows(reduceCols(set, proj.V), proj.W);
}

Matrix center(const QmiSet& set) {
    requireRegular(set, "center");
    return -parts(set).H;
}

Matrix liftRows(const QmiSet& set, const Matrix& W, const Matrix& ZW) {
    requireRegular(set, "lift");
    requireFullColumnRank(W, set.rowDim(), "W");
    const Index p = set.rowDim(), q = set.colDim(), r = W.cols();
    if (ZW.rows() != r || ZW.cols() != q) throw DimensionMismatch("lift: reduced member has wrong shape");

    const Parts pt = parts(set);
    const Matrix psi22 = set.psi22();
    const Matrix ZbarW = ZW + W.transpose() * pt.H;
    const Matrix SWW = linalg::symmetrize(W.transpose() * pt.S * W);
    const Matrix QW = linalg::symmetrize(SWW + ZbarW * psi22 * ZbarW.transpose());
    const double tol = 1e-8 * (1.0 + set.norm());
    if (linalg::minEigenvalue(QW) < -tol) throw NotAMember("lift: reduced matrix is not a member");

    // T = [W W̃]; in these coordinates S = Fᵀ blkdiag(Sww, Δ) F with F = [I E; 0 I].
    // Extending Q_W by Δ (the full Schur complement) leaves S − Q = T⁻ᵀ Fᵀ
    // blkdiag(−Z̄_W Ψ22 Z̄_Wᵀ, 0) F T⁻¹, which factors exactly as R Rᵀ below.
    const Matrix Wt = linalg::orthonormalComplement(W);
    Matrix T(p, p);
    T << W, Wt;
    Eigen::LDLT<Matrix> sww(SWW);
    if (sww.info() != Eigen::Success) throw LiftDegenerate("lift: W'SW is not invertible");
    const Matrix E = sww.solve(W.transpose() * pt.S * Wt);

    const Matrix negPsi22 = -psi22;
    const Matrix sq = linalg::symSqrt(negPsi22);  // (−Ψ22)^{1/2}
    const Matrix YW = ZbarW * sq;                 // r × q, Y_W Y_Wᵀ = −Z̄_W Ψ22 Z̄_Wᵀ
    Matrix blocks(p, q);
    blocks << YW, E.transpose() * YW;
    Eigen::PartialPivLU<Matrix> Tt(T.transpose());
    const Matrix R = Tt.solve(blocks);  // p × q, R Rᵀ = S − Q

    // Procrustes: orthogonal U with U (Rᵀ W) = (−Ψ22)^{1/2} Z̄_Wᵀ.
    const Matrix X = R.transpose() * W;
    const Matrix Y = YW.transpose();
    Eigen::JacobiSVD<Matrix> svd(Y * X.transpose(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix U = svd.matrixU() * svd.matrixV().transpose();
    if ((U * X - Y).norm() > 1e-9 * (1.0 + Y.norm()))
        throw LiftDegenerate("lift: orthogonal factor does not match the reduced member");

    // (−Ψ22)^{1/2} Z̄ᵀ = U Rᵀ, then undo the centering shift.
    Eigen::LLT<Matrix> sqf(sq);
    if (sqf.info() != Eigen::Success) throw LiftDegenerate("lift: (-Psi22)^{1/2} is singular");
    const Matrix ZbarT = sqf.solve(U * R.transpose());
    Matrix Z = ZbarT.transpose() - pt.H;
    if ((W.transpose() * Z - ZW).norm() > 1e-8 * (1.0 + ZW.norm()))
        throw LiftDegenerate("lift: result does not reproduce the reduced member");
    return Z;
}

Matrix lift(const QmiSet& set, const QmiSet& reduced, const ProjectionPair& proj,
            const Matrix& Zhat) {
    requireRegular(set, "lift");
    requireFullColumnRank(proj.W, set.rowDim(), "W");
    requireFullColumnRank(proj.V, set.colDim(), "V");
    if (reduced.rowDim() != proj.W.cols() || reduced.colDim() != proj.V.cols())
        throw DimensionMismatch("lift: reduced set does not match the projectors");
    if (Zhat.rows() != reduced.rowDim() || Zhat.cols() != reduced.colDim())
        throw DimensionMismatch("lift: Zhat has wrong shape");
    if (!isMember(reduced, Zhat)) throw NotAMember("lift: Zhat is not a member of the reduced set");

    // Rows first on the column-reduced set, then columns through the dual.
    const QmiSet setV = reduceCols(set, proj.V);
    const Matrix ZV = liftRows(setV, proj.W, Zhat);
    const Matrix Zt = liftRows(dual(set), proj.V, ZV.transpose());
    return Zt.transpose();
}

Matrix sampleMember(const QmiSet& set, std::mt19937_64& rng, SampleKind kind) {
    requireRegular(set, "sampleMember");
    const Parts pt = parts(set);
    const Index p = set.rowDim(), q = set.colDim();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix K(p, q);
    for (Index j = 0; j < q; ++j)
        for (Index i = 0; i < p; ++i) K(i, j) = gauss(rng);
    double scale = 1.0;
    if (kind == SampleKind::Interior) scale = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    K *= scale / linalg::norm2(K);
    return -pt.H + linalg::symSqrt(pt.S) * K * linalg::symInvSqrt(-set.psi22());
}

}  // namespace qmi
}  // namespace ddbt
