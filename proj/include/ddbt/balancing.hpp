#pragma once

#include <vector>

#include "ddbt/model.hpp"
#include "ddbt/qmi.hpp"

namespace ddbt {

struct BalancingResult {
    Matrix T;
    Matrix Tinv;
    Vector hsv;                          // all n values, descending
    std::vector<Index> multiplicities;   // m₁ … m_κ, summing to n

    Index kappa() const { return static_cast<Index>(multiplicities.size()); }
    // Admissible truncation orders m₁, m₁+m₂, …, n.
    std::vector<Index> boundaries() const;
    // Number of retained groups ℓ for a boundary order r; −1 if r splits a group.
    Index groupsRetained(Index r) const;
};

struct ReductionSetup {
    Index r = 0;
    Index ell = 0;
    Matrix What;          // TᵀΠ
    Matrix Vhat;          // T⁻¹Π
    ProjectionPair proj;  // blkdiag(Ŵ, I_p), blkdiag(V̂, I_m)
    QmiSet Nred;
};

namespace balancing {

inline constexpr double kGroupTol = 1e-8;

BalancingResult balanceFromGramians(const Matrix& P, const Matrix& Q, double groupTol = kGroupTol);
// Throws MultiplicitySplit unless r is one of the admissible boundaries.
void requireBoundary(const BalancingResult& bal, Index r);
StateSpaceModel truncateModel(const StateSpaceModel& model, const BalancingResult& bal, Index r);
ReductionSetup buildReductionSetup(const QmiSet& N, const BalancingResult& bal, Index r, const Dims& dims);
double classicalBound(const BalancingResult& bal, Index r);

}  // namespace balancing
}  // namespace ddbt
