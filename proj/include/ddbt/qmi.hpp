#pragma once

#include <cstdint>
#include <random>

#include "ddbt/linalg.hpp"

namespace ddbt {

// The set {Z : [I; Zᵀ]ᵀ Ψ [I; Zᵀ] ⪰ 0} with Z of size rowDim × colDim.
class QmiSet {
public:
    QmiSet() = default;
    QmiSet(const Matrix& psi, Index rowDim, Index colDim);

    const Matrix& psi() const { return psi_; }
    Index rowDim() const { return p_; }
    Index colDim() const { return q_; }
    Index dim() const { return p_ + q_; }

    Matrix psi11() const { return psi_.topLeftCorner(p_, p_); }
    Matrix psi12() const { return psi_.topRightCorner(p_, q_); }
    Matrix psi22() const { return psi_.bottomRightCorner(q_, q_); }

    double norm() const;
    QmiSet scaled(double c) const { return QmiSet(c * psi_, p_, q_); }

private:
    Matrix psi_;
    Index p_ = 0;
    Index q_ = 0;
};

struct ProjectionPair {
    Matrix W;  // rowDim × r̂
    Matrix V;  // colDim × q̂
};

namespace qmi {

Matrix memberResidual(const QmiSet& set, const Matrix& Z);
// Scale-aware membership slack 1e−8·(1 + ‖Ψ‖₂).
double membershipTolerance(const QmiSet& set);
// tol < 0 selects membershipTolerance(set).
bool isMember(const QmiSet& set, const Matrix& Z, double tol = -1.0);

bool checkRegularity(const QmiSet& set);
// Throws RegularityFailure with a description unless checkRegularity holds.
void requireRegular(const QmiSet& set, const char* who);
bool checkSlaterByInertia(const QmiSet& set);

QmiSet dual(const QmiSet& set);
QmiSet projectRows(const QmiSet& set, const Matrix& W);
QmiSet reduce(const QmiSet& set, const ProjectionPair& proj);
Matrix center(const QmiSet& set);

// Constructive member of `set` with Wᵀ Z V = Zhat, where Zhat is a member of
// `reduced` = reduce(set, proj).
Matrix lift(const QmiSet& set, const QmiSet& reduced, const ProjectionPair& proj,
            const Matrix& Zhat);

// Single-sided lift: member Z of `set` with Wᵀ Z = ZW, given ZW a member of projectRows(set, W).
Matrix liftRows(const QmiSet& set, const Matrix& W, const Matrix& ZW);

enum class SampleKind { Interior, Boundary };

// Z = Z_c + (Ψ|Ψ22)^{1/2} K (−Ψ22)^{−1/2} with a random contraction K
// (‖K‖₂ = 1 for boundary samples).
Matrix sampleMember(const QmiSet& set, std::mt19937_64& rng, SampleKind kind = SampleKind::Interior);

}  // namespace qmi
}  // namespace ddbt
