#include "ddbt/data.hpp"

#include <algorithm>
#include <cmath>

#include "ddbt/errors.hpp"

namespace ddbt {

bool NoiseModel::isValid() const {
    if (phi22.rows() == 0 || phi11.rows() == 0) return false;
    if (linalg::maxEigenvalue(phi22) >= 0) return false;
    return linalg::isPosDef(linalg::schurComplement(phi(), rows()));
}

Matrix NoiseModel::phi() const {
    const Index r = rows(), L = samples();
    Matrix out(r + L, r + L);
    out << phi11, phi12, phi12.transpose(), phi22;
    return out;
}

NoiseModel NoiseModel::energyBound(double bound, Index rows, Index L) {
    NoiseModel nm;
    nm.phi11 = bound * Matrix::Identity(rows, rows);
    nm.phi12 = Matrix::Zero(rows, L);
    nm.phi22 = -Matrix::Identity(L, L);
    return nm;
}

void TrajectoryData::validate() const {
    if (Xfull.cols() != L() + 1) throw DimensionMismatch("trajectory: X must have L+1 columns");
    if (Yminus.cols() != L()) throw DimensionMismatch("trajectory: Y_minus must have L columns");
    if (!Uminus.allFinite() || !Xfull.allFinite() || !Yminus.allFinite())
        throw Error("trajectory: non-finite entries");
}

namespace data {

TrajectoryData simulate(const StateSpaceModel& model, const Matrix& u, const Vector& x0,
                        const Matrix& w, const Matrix& z) {
    model.validate();
    const Index n = model.n(), m = model.m(), p = model.p(), L = u.cols();
    if (u.rows() != m) throw DimensionMismatch("simulate: input has wrong number of rows");
    if (x0.size() != n) throw DimensionMismatch("simulate: x0 has wrong size");
    if (w.rows() != n || w.cols() != L) throw DimensionMismatch("simulate: w must be n x L");
    if (z.rows() != p || z.cols() != L) throw DimensionMismatch("simulate: z must be p x L");

    TrajectoryData t;
    t.Uminus = u;
    t.Xfull.resize(n, L + 1);
    t.Yminus.resize(p, L);
    t.Xfull.col(0) = x0;
    for (Index k = 0; k < L; ++k) {
        t.Xfull.col(k + 1) = model.A * t.Xfull.col(k) + model.B * u.col(k) + w.col(k);
        t.Yminus.col(k) = model.C * t.Xfull.col(k) + model.D * u.col(k) + z.col(k);
    }
    return t;
}

bool validateNoise(const NoiseModel& noise, const Matrix& w, const Matrix& z) {
    if (w.cols() != z.cols() || w.rows() + z.rows() != noise.rows() || w.cols() != noise.samples())
        throw DimensionMismatch("validateNoise: noise shape does not match the noise model");
    Matrix Z(noise.rows(), w.cols());
    Z << w, z;
    const Matrix P12Zt = noise.phi12 * Z.transpose();
    const Matrix R = noise.phi11 + P12Zt + P12Zt.transpose() + Z * noise.phi22 * Z.transpose();
    const double scale = std::max(linalg::symNorm2(noise.phi11), linalg::symNorm2(noise.phi22)) +
                         linalg::norm2(noise.phi12);
    return linalg::minEigenvalue(linalg::symmetrize(R)) >= -1e-8 * (1.0 + scale);
}

QmiSet buildN(const TrajectoryData& traj, const NoiseModel& noise) {
    traj.validate();
    const Index n = traj.n(), m = traj.m(), p = traj.p(), L = traj.L();
    if (noise.rows() != n + p || noise.samples() != L)
        throw DimensionMismatch("buildN: noise model does not match the data dimensions");
    // M = [I, [X₊; Y₋]; 0, −[X₋; U₋]],  N = M Φ Mᵀ.
    Matrix M = Matrix::Zero(2 * n + p + m, n + p + L);
    M.topLeftCorner(n + p, n + p).setIdentity();
    M.block(0, n + p, n, L) = traj.Xplus();
    M.block(n, n + p, p, L) = traj.Yminus;
    M.block(n + p, n + p, n, L) = -traj.Xminus();
    M.block(2 * n + p, n + p, m, L) = -traj.Uminus;
    const Matrix N = M * noise.phi() * M.transpose();
    return QmiSet(linalg::symmetrize(N), n + p, n + m);
}

bool fullRowRankCheck(const TrajectoryData& traj) {
    const Index n = traj.n(), m = traj.m(), L = traj.L();
    if (L < n + m) return false;
    Matrix H(n + m, L);
    H << traj.Xminus(), traj.Uminus;
    Eigen::JacobiSVD<Matrix> svd(H);
    const Vector s = svd.singularValues();
    if (s(0) == 0.0) return false;
    return s(s.size() - 1) > 1e-8 * s(0);
}

Matrix referenceInput(Index L) {
    Matrix u(1, L);
    for (Index k = 0; k < L; ++k) {
        const double kk = static_cast<double>(k);
        u(0, k) = 2.0 * std::sin(kk) + std::cos(0.5 * kk);
    }
    return u;
}

}  // namespace data
}  // namespace ddbt
