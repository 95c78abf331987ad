#include "ddbt/informativity.hpp"

#include <algorithm>
#include <mutex>

#include "ddbt/errors.hpp"

namespace ddbt::informativity {

namespace {

Matrix selectRows(Index total, Index keep) {
    Matrix W = Matrix::Zero(total, keep);
    W.topRows(keep).setIdentity();
    return W;
}

struct GramianLmi {
    Matrix X;
    double multiplier = 0.0;
    double margin = 0.0;
    double epsilon = 0.0;
    std::string status;
};

// blkdiag(X, −X, −I_k) − a·M ≻ 0 with X ≻ 0, a > 0; M is rescaled to unit norm first.
GramianLmi solveGramianLmi(const QmiSet& set, Index n, Index k, const InformativityOptions& opts,
                           const char* what) {
    const double scale = set.norm();
    const Matrix M = set.psi() / scale;
    const double eps = strictMargin(M);

    sdp::Problem pr;
    const sdp::SymmetricVariable X = pr.addSymmetric("X", n);
    const Index a = pr.addScalar("a");
    const sdp::Affine Xe = X.expr();
    const sdp::Affine lhs = sdp::Affine::blocks({
        {Xe, sdp::zeros(n, n), sdp::zeros(n, k)},
        {sdp::zeros(n, n), -Xe, sdp::zeros(n, k)},
        {sdp::zeros(k, n), sdp::zeros(k, n), sdp::Affine::constant(-Matrix::Identity(k, k))},
    });
    pr.addLmi(lhs - sdp::Affine::variable(a, M), eps, what);
    pr.addLmi(Xe, eps, "X > 0");
    pr.addLmi(sdp::Problem::scalar(a), eps, "multiplier > 0");
    if (opts.minimizeTrace) {
        sdp::Affine tr(1, 1);
        for (Index i = 0; i < n; ++i) tr += Xe.block(i, i, 1, 1);
        pr.maximize(-tr);
    }

    const sdp::Backend& backend = opts.backend ? *opts.backend : sdp::defaultBackend();
    sdp::Solution sol;
    if (backend.threadSafe()) {
        sol = backend.solve(pr, opts.solver);
    } else {
        static std::mutex mutex;
        std::lock_guard<std::mutex> lock(mutex);
        sol = backend.solve(pr, opts.solver);
    }
    if (!sol.feasible()) {
        if (sol.status == sdp::Status::Infeasible)
            throw Infeasible(std::string(what) + " has no solution: data are not informative");
        throw SolverError(std::string(what) + " could not be solved", sdp::toString(sol.status));
    }
    GramianLmi out;
    out.X = X.value(sol.y);
    out.multiplier = sol.y(a) / scale;
    out.margin = *std::min_element(sol.lmiMinEig.begin(), sol.lmiMinEig.end());
    out.epsilon = eps;
    out.status = sdp::toString(sol.status);
    return out;
}

}  // namespace

QmiSet controllabilitySet(const QmiSet& N, const Dims& d) {
    if (N.rowDim() != d.n + d.p || N.colDim() != d.n + d.m)
        throw DimensionMismatch("controllabilitySet: N does not match the dimensions");
    return qmi::projectRows(N, selectRows(d.n + d.p, d.n));
}

QmiSet observabilitySet(const QmiSet& N, const Dims& d) {
    if (N.rowDim() != d.n + d.p || N.colDim() != d.n + d.m)
        throw DimensionMismatch("observabilitySet: N does not match the dimensions");
    return qmi::projectRows(qmi::dual(N), selectRows(d.n + d.m, d.n));
}

double strictMargin(const Matrix& normalized) { return 1e-6 * (1.0 + linalg::symNorm2(normalized)); }

InformativityCertificate checkInformativity(const QmiSet& N, const Dims& dims, const InformativityOptions& opts) {
    if (!qmi::checkSlaterByInertia(N))
        throw PreconditionFailure("N fails the generalized Slater condition (inertia check)");
    const GramianLmi c = solveGramianLmi(controllabilitySet(N, dims), dims.n, dims.m, opts, "controllability LMI");
    const GramianLmi o = solveGramianLmi(observabilitySet(N, dims), dims.n, dims.p, opts, "observability LMI");
    InformativityCertificate cert;
    cert.P = c.X;
    cert.Q = o.X;
    cert.alpha = c.multiplier;
    cert.beta = o.multiplier;
    cert.marginP = c.margin;
    cert.marginQ = o.margin;
    cert.epsilon = std::max(c.epsilon, o.epsilon);
    cert.statusP = c.status;
    cert.statusQ = o.status;
    return cert;
}

bool gramianDominance(const Matrix& P, const Matrix& Pref) {
    if (P.rows() != Pref.rows() || P.cols() != Pref.cols())
        throw DimensionMismatch("gramianDominance: size mismatch");
    return linalg::minEigenvalue(linalg::symmetrize(P - Pref)) > 0.0;
}

}  // namespace ddbt::informativity
