#pragma once

#include <string>

#include "ddbt/model.hpp"
#include "ddbt/qmi.hpp"
#include "ddbt/sdp.hpp"

namespace ddbt {

struct InformativityCertificate {
    Matrix P;
    Matrix Q;
    double alpha = 0.0;
    double beta = 0.0;
    double marginP = 0.0;  // λmin of the controllability LMI minus the strictness margin
    double marginQ = 0.0;
    double epsilon = 0.0;  // strictness margin used (on the normalized LMIs)
    std::string statusP;
    std::string statusQ;
};

struct InformativityOptions {
    bool minimizeTrace = true;
    const sdp::Backend* backend = nullptr;  // nullptr: sdp::defaultBackend()
    sdp::SolverOptions solver;
};

namespace informativity {

// Rows of N belonging to x(k+1), all columns: N_C.
QmiSet controllabilitySet(const QmiSet& N, const Dims& dims);
// Same selection applied to the dual N^♯: N_O.
QmiSet observabilitySet(const QmiSet& N, const Dims& dims);

// ε = 1e−6 (1 + ‖M‖₂) for the normalized matrix M entering an LMI.
double strictMargin(const Matrix& normalized);

// Solves blkdiag(P, −P, −I_m) − α N_C ≻ 0 and blkdiag(Q, −Q, −I_p) − β N_O ≻ 0.
// Throws PreconditionFailure if N fails the Slater check and Infeasible if
// either LMI has no solution.
InformativityCertificate checkInformativity(const QmiSet& N, const Dims& dims,
                                            const InformativityOptions& opts = {});

// P − Pref ≻ 0.
bool gramianDominance(const Matrix& P, const Matrix& Pref);

}  // namespace informativity
}  // namespace ddbt
