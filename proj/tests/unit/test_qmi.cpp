#include <gtest/gtest.h>

#include "ddbt/errors.hpp"
#include "ddbt/qmi.hpp"
#include "fixtures.hpp"

using namespace ddbt;
using ddbt::testing::randn;
using ddbt::testing::randomRegularSet;

namespace {

QmiSet unitBall(Index p, Index q) {
    return QmiSet(linalg::blkdiag(Matrix::Identity(p, p), -Matrix::Identity(q, q)), p, q);
}

double memberSlack(const QmiSet& s, const Matrix& Z) { return linalg::minEigenvalue(qmi::memberResidual(s, Z)); }

}  // namespace

TEST(Membership, UnitBallCenterAndOutside) {
    const QmiSet s = unitBall(2, 3);
    EXPECT_TRUE(qmi::memberResidual(s, Matrix::Zero(2, 3)).isApprox(Matrix::Identity(2, 2)));
    EXPECT_TRUE(qmi::isMember(s, Matrix::Zero(2, 3)));
    Matrix Z = Matrix::Zero(2, 3);
    Z(0, 0) = 1.5;
    EXPECT_FALSE(qmi::isMember(s, Z));
    EXPECT_LT(memberSlack(s, Z), 0.0);
    EXPECT_GT(linalg::maxEigenvalue(qmi::memberResidual(s, Z)), 0.0);
}

TEST(Membership, DimensionMismatch) {
    EXPECT_THROW(qmi::memberResidual(unitBall(2, 3), Matrix::Zero(3, 2)), DimensionMismatch);
}

TEST(Regularity, Examples) {
    EXPECT_TRUE(qmi::checkRegularity(unitBall(3, 2)));
    EXPECT_FALSE(qmi::checkRegularity(QmiSet(-Matrix::Identity(5, 5), 3, 2)));
}

TEST(Slater, Examples) {
    EXPECT_TRUE(qmi::checkSlaterByInertia(unitBall(3, 2)));
    EXPECT_FALSE(qmi::checkSlaterByInertia(QmiSet(Matrix::Zero(5, 5), 3, 2)));
}

TEST(Slater, EquivalentToRegularityOnRandomSets) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Index p = 1 + t % 4, q = 1 + (t / 4) % 4;
        QmiSet s = randomRegularSet(rng, p, q);
        if (t % 3 == 0) {
            // Perturbation that can break regularity.
            Matrix psi = s.psi();
            psi.topLeftCorner(p, p) -= 3.0 * linalg::maxEigenvalue(linalg::schurComplement(psi, p)) *
                                       Matrix::Identity(p, p) * (t % 2 ? 1.0 : 0.2);
            s = QmiSet(psi, p, q);
        }
        EXPECT_EQ(qmi::checkSlaterByInertia(s), qmi::checkRegularity(s)) << "trial " << t;
    }
}

TEST(Dual, UnitBallIsSelfDual) {
    const QmiSet d = qmi::dual(unitBall(2, 3));
    EXPECT_EQ(d.rowDim(), 3);
    EXPECT_EQ(d.colDim(), 2);
    EXPECT_TRUE(d.psi().isApprox(linalg::blkdiag(Matrix::Identity(3, 3), -Matrix::Identity(2, 2)), 1e-14));
}

TEST(Dual, SingularPsiThrows) { EXPECT_THROW(qmi::dual(QmiSet(Matrix::Zero(4, 4), 2, 2)), SingularPsi); }

TEST(Dual, InvolutionAndTransposedMembers) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const Index p = 1 + t % 5, q = 1 + (t / 5) % 5;
        const QmiSet s = randomRegularSet(rng, p, q);
        const QmiSet dd = qmi::dual(qmi::dual(s));
        EXPECT_LT((dd.psi() - s.psi()).norm(), 1e-10 * (1 + s.psi().norm()));
        const QmiSet d = qmi::dual(s);
        const Matrix Z = qmi::sampleMember(s, rng, t % 2 ? qmi::SampleKind::Boundary : qmi::SampleKind::Interior);
        EXPECT_TRUE(qmi::isMember(d, Z.transpose()));
    }
}

TEST(Reduce, IdentityProjectionIsIdentity) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; ++t) {
        const Index p = 1 + t % 6, q = 1 + (t / 6) % 5;
        const QmiSet s = randomRegularSet(rng, p, q);
        const QmiSet r = qmi::reduce(s, {Matrix::Identity(p, p), Matrix::Identity(q, q)});
        EXPECT_LT((r.psi() - s.psi()).norm(), 1e-10 * (1 + s.psi().norm()));
    }
}

TEST(Reduce, ResultIsRegularAndContainsProjectedMembers) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        const Index p = 2 + t % 4, q = 2 + (t / 4) % 4;
        const QmiSet s = randomRegularSet(rng, p, q);
        const ProjectionPair proj{randn(rng, p, p - 1), randn(rng, q, q - 1)};
        const QmiSet r = qmi::reduce(s, proj);
        EXPECT_TRUE(qmi::checkRegularity(r));
        for (int k = 0; k < 5; ++k) {
            const Matrix Z = qmi::sampleMember(s, rng, k % 2 ? qmi::SampleKind::Boundary : qmi::SampleKind::Interior);
            EXPECT_GE(memberSlack(r, proj.W.transpose() * Z * proj.V), -1e-8 * (1 + r.norm()));
        }
    }
}

TEST(Reduce, RankDeficientProjectorThrows) {
    std::mt19937_64 rng(59);
    const QmiSet s = randomRegularSet(rng, 3, 3);
    Matrix W = randn(rng, 3, 2);
    W.col(1) = W.col(0);
    EXPECT_THROW(qmi::reduce(s, {W, Matrix::Identity(3, 3)}), RankDeficient);
}

TEST(ProjectRows, IdentityUnchangedAndBlockFormula) {
    std::mt19937_64 rng(61);
    const QmiSet s = randomRegularSet(rng, 4, 3);
    EXPECT_LT((qmi::projectRows(s, Matrix::Identity(4, 4)).psi() - s.psi()).norm(), 1e-12 * s.psi().norm());
    const Matrix W = randn(rng, 4, 2);
    const QmiSet r = qmi::projectRows(s, W);
    EXPECT_TRUE(r.psi11().isApprox(W.transpose() * s.psi11() * W, 1e-12));
    EXPECT_TRUE(r.psi12().isApprox(W.transpose() * s.psi12(), 1e-12));
    EXPECT_TRUE(r.psi22().isApprox(s.psi22(), 1e-12));
}

TEST(Center, UnitBallAndResidual) {
    EXPECT_EQ(qmi::center(unitBall(2, 2)).norm(), 0.0);
    std::mt19937_64 rng(67);
    const QmiSet s = randomRegularSet(rng, 3, 4);
    const Matrix Zc = qmi::center(s);
    EXPECT_TRUE(qmi::memberResidual(s, Zc).isApprox(linalg::schurComplement(s.psi(), 3), 1e-9));
}

TEST(Lift, IdentityProjectionReturnsInput) {
    std::mt19937_64 rng(71);
    const QmiSet s = randomRegularSet(rng, 3, 3);
    const ProjectionPair id{Matrix::Identity(3, 3), Matrix::Identity(3, 3)};
    const Matrix Z = qmi::sampleMember(s, rng);
    EXPECT_LT((qmi::lift(s, qmi::reduce(s, id), id, Z) - Z).norm(), 1e-8 * (1 + Z.norm()));
}

TEST(Lift, ReverseInclusionOnRandomSets) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        const Index p = 2 + t % 4, q = 2 + (t / 4) % 4;
        const QmiSet s = randomRegularSet(rng, p, q);
        const ProjectionPair proj{randn(rng, p, 1 + t % (p - 1)), randn(rng, q, 1 + t % (q - 1))};
        const QmiSet r = qmi::reduce(s, proj);
        const Matrix Zh = t % 3 == 0 ? qmi::center(r)
                                     : qmi::sampleMember(r, rng, t % 2 ? qmi::SampleKind::Boundary
                                                                       : qmi::SampleKind::Interior);
        const Matrix Z = qmi::lift(s, r, proj, Zh);
        EXPECT_GE(memberSlack(s, Z), -qmi::membershipTolerance(s)) << "trial " << t;
        EXPECT_LT((proj.W.transpose() * Z * proj.V - Zh).norm(), 1e-8 * (1 + Zh.norm())) << "trial " << t;
    }
}

TEST(Lift, RowLiftMatchesClosedForm) {
    // Independent check: Z̄ = S W (WᵀSW)⁻¹ Z̄_W where Z̄ = Z − Z_c and S = Ψ|Ψ22.
    std::mt19937_64 rng(79);
    for (int t = 0; t < 30; ++t) {
        const Index p = 3 + t % 3, q = 2 + t % 3;
        const QmiSet s = randomRegularSet(rng, p, q);
        const Matrix W = randn(rng, p, 2);
        const QmiSet r = qmi::projectRows(s, W);
        const Matrix ZW = qmi::sampleMember(r, rng, qmi::SampleKind::Boundary);
        const Matrix Z = qmi::liftRows(s, W, ZW);
        const Matrix S = linalg::schurComplement(s.psi(), p);
        const Matrix Zc = qmi::center(s), ZcW = qmi::center(r);
        const Matrix expected = Zc + S * W * (W.transpose() * S * W).inverse() * (ZW - ZcW);
        EXPECT_LT((Z - expected).norm(), 1e-8 * (1 + expected.norm())) << "trial " << t;
    }
}

TEST(Lift, NonMemberThrows) {
    std::mt19937_64 rng(83);
    const QmiSet s = randomRegularSet(rng, 3, 3);
    const ProjectionPair proj{randn(rng, 3, 2), randn(rng, 3, 2)};
    const QmiSet r = qmi::reduce(s, proj);
    const Matrix far = qmi::center(r) + 1e3 * Matrix::Ones(2, 2);
    EXPECT_THROW(qmi::lift(s, r, proj, far), NotAMember);
}

TEST(Sample, MembersIncludingBoundary) {
    std::mt19937_64 rng(89);
    const QmiSet s = randomRegularSet(rng, 3, 4);
    for (int k = 0; k < 50; ++k) {
        const Matrix Zi = qmi::sampleMember(s, rng, qmi::SampleKind::Interior);
        const Matrix Zb = qmi::sampleMember(s, rng, qmi::SampleKind::Boundary);
        EXPECT_TRUE(qmi::isMember(s, Zi));
        EXPECT_TRUE(qmi::isMember(s, Zb));
        EXPECT_LT(memberSlack(s, Zb), 1e-8 * (1 + s.norm()));
    }
}
