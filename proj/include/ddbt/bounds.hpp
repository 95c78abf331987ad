#pragma once

#include <string>

#include "ddbt/model.hpp"
#include "ddbt/qmi.hpp"
#include "ddbt/sdp.hpp"

namespace ddbt {

struct AprioriBound {
    double gamma = 0.0;
    double tau = 0.0;  // γ⁻²
    Matrix K;
    double delta = 0.0;
    double eta = 0.0;
    double mu = 0.0;
    double margin = 0.0;  // smallest LMI eigenvalue above the strictness margin
    double epsilon = 0.0;
    std::string solverStatus;
};

struct AposterioriBound {
    double gamma0 = 0.0;
    double tau0 = 0.0;
    Matrix K;
    double delta = 0.0;
    double margin = 0.0;
    double epsilon = 0.0;
    std::string solverStatus;
};

struct HinfResult {
    double norm = 0.0;
    bool certified = false;
    double tolerance = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double peakFrequency = 0.0;
    int iterations = 0;
};

struct BoundOptions {
    const sdp::Backend* backend = nullptr;
    sdp::SolverOptions solver;
};

namespace bounds {

// Variable handles of the a priori LMI.
struct AprioriVars {
    sdp::SymmetricVariable K;  // (n+r)
    Index mu, tau, delta, eta;
};
// Θ(K, μ, τ) − blkdiag(δ N, η Nred) for the given N and Nred.
sdp::Affine aprioriLmi(const Matrix& N, const Matrix& Nred, const Dims& dims, Index r, const AprioriVars& v);

struct AposterioriVars {
    sdp::SymmetricVariable K;  // (n+r)
    Index tau, delta;
};
sdp::Affine aposterioriLmi(const Matrix& N, const StateSpaceModel& rom, const Dims& dims, const AposterioriVars& v);

// Uniform bound on ‖Σ̂ − Σ‖ over the data-consistent sets. Throws Infeasible.
AprioriBound aprioriBound(const QmiSet& N, const QmiSet& Nred, const Dims& dims, Index r,
                          const BoundOptions& opts = {});
// Bound on ‖Σ̂₀ − Σ‖ for one reduced model over the consistent full models. Throws Infeasible.
AposterioriBound aposterioriBound(const QmiSet& N, const StateSpaceModel& rom, const Dims& dims,
                                  const BoundOptions& opts = {});

// A_d = blkdiag(A, Â), B_d = [B; B̂], C_d = [C, −Ĉ], D_d = D − D̂.
StateSpaceModel assembleErrorSystem(const StateSpaceModel& full, const StateSpaceModel& rom);

// H∞ norm by bisection on γ. Feasibility at γ is decided by the unit-circle
// eigenvalues of the γ-dependent symplectic pencil; unit-circle crossings are
// confirmed by a frequency-response witness, which also raises the lower end.
HinfResult hinfNorm(const StateSpaceModel& model, double tol = 1e-8,
                    kernels::Policy policy = kernels::Policy::Serial);

// Bounded real lemma feasibility (‖G‖∞ < γ) as an SDP; used as an independent check.
bool boundedRealFeasible(const StateSpaceModel& model, double gamma, const BoundOptions& opts = {});

// max over an N-point uniform grid on [0, π] of σmax(G(e^{iω})).
double gridPeak(const StateSpaceModel& model, Index points, kernels::Policy policy = kernels::Policy::Serial);

}  // namespace bounds
}  // namespace ddbt
