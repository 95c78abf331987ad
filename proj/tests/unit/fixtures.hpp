#pragma once

#include <random>

#include "ddbt/data.hpp"
#include "ddbt/experiment.hpp"
#include "ddbt/linalg.hpp"
#include "ddbt/model.hpp"
#include "ddbt/qmi.hpp"

namespace ddbt::testing {

inline Matrix randn(std::mt19937_64& rng, Index r, Index c) {
    std::normal_distribution<double> nd;
    Matrix M(r, c);
    for (Index j = 0; j < c; ++j)
        for (Index i = 0; i < r; ++i) M(i, j) = nd(rng);
    return M;
}

inline Matrix randomSpd(std::mt19937_64& rng, Index n, double floor = 0.1) {
    const Matrix G = randn(rng, n, n);
    return G * G.transpose() + floor * Matrix::Identity(n, n);
}

inline Matrix randomSym(std::mt19937_64& rng, Index n) {
    const Matrix G = randn(rng, n, n);
    return 0.5 * (G + G.transpose());
}

// Ψ with prescribed center Zc, Ψ22 ≺ 0 and Ψ|Ψ22 ≻ 0.
inline QmiSet randomRegularSet(std::mt19937_64& rng, Index p, Index q) {
    const Matrix Zc = randn(rng, p, q);
    const Matrix P22 = -randomSpd(rng, q, 0.5);
    const Matrix S = randomSpd(rng, p, 0.5);
    const Matrix P12 = -Zc * P22;
    Matrix psi(p + q, p + q);
    psi << S + P12 * P22.inverse() * P12.transpose(), P12, P12.transpose(), P22;
    return QmiSet(linalg::symmetrize(psi), p, q);
}

inline StateSpaceModel randomStableModel(std::mt19937_64& rng, Index n, Index m, Index p, double rho = 0.8) {
    StateSpaceModel s;
    s.A = randn(rng, n, n);
    s.A *= rho / std::max(linalg::spectralRadius(s.A), 1e-12);
    s.B = randn(rng, n, m);
    s.C = randn(rng, p, n);
    s.D = randn(rng, p, m);
    return s;
}

inline ExperimentConfig deskConfig(double sigma, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.sigma = sigma;
    cfg.seed = seed;
    return cfg;
}

}  // namespace ddbt::testing
