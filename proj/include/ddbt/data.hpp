#pragma once

#include <cstdint>
#include <string>

#include "ddbt/model.hpp"
#include "ddbt/qmi.hpp"

namespace ddbt {

// Φ = [Φ11 Φ12; Φ12ᵀ Φ22]: admissible noise [w; z] satisfies
// Φ11 + Φ12 Zᵀ + Z Φ12ᵀ + Z Φ22 Zᵀ ⪰ 0.
struct NoiseModel {
    Matrix phi11;  // (n+p) × (n+p)
    Matrix phi12;  // (n+p) × L
    Matrix phi22;  // L × L

    Index rows() const { return phi11.rows(); }
    Index samples() const { return phi22.rows(); }
    // Φ22 ≺ 0 and Φ|Φ22 ≻ 0.
    bool isValid() const;
    Matrix phi() const;

    // Φ11 = bound·I, Φ12 = 0, Φ22 = −I_L.
    static NoiseModel energyBound(double bound, Index rows, Index L);
};

struct TrajectoryData {
    Matrix Uminus;  // m × L
    Matrix Xfull;   // n × (L+1)
    Matrix Yminus;  // p × L

    Index L() const { return Uminus.cols(); }
    Index n() const { return Xfull.rows(); }
    Index m() const { return Uminus.rows(); }
    Index p() const { return Yminus.rows(); }
    Matrix Xminus() const { return Xfull.leftCols(L()); }
    Matrix Xplus() const { return Xfull.rightCols(L()); }
    void validate() const;
};

namespace data {

TrajectoryData simulate(const StateSpaceModel& model, const Matrix& u, const Vector& x0,
                        const Matrix& w, const Matrix& z);
bool validateNoise(const NoiseModel& noise, const Matrix& w, const Matrix& z);
QmiSet buildN(const TrajectoryData& traj, const NoiseModel& noise);
bool fullRowRankCheck(const TrajectoryData& traj);

// u(k) = 2 sin(k) + cos(k/2), k = 0..L−1.
Matrix referenceInput(Index L);

}  // namespace data
}  // namespace ddbt
