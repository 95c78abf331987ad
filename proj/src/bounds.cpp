#include "ddbt/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ddbt/errors.hpp"
#include "ddbt/informativity.hpp"

namespace ddbt::bounds {

namespace {

using sdp::Affine;

constexpr double kBoundBox = 1e8;

Affine cst(const Matrix& M) { return Affine::constant(M); }
Affine zero(Index r, Index c) { return sdp::zeros(r, c); }
Affine tauTimes(Index tau, const Matrix& M) { return Affine::variable(tau, M); }

sdp::Solution runSdp(const sdp::Problem& pr, const BoundOptions& opts) {
    const sdp::Backend& backend = opts.backend ? *opts.backend : sdp::defaultBackend();
    return backend.solve(pr, opts.solver);
}

}  // namespace

Affine aprioriLmi(const Matrix& N, const Matrix& Nred, const Dims& d, Index r, const AprioriVars& v) {
    const Index n = d.n, m = d.m, p = d.p;
    if (N.rows() != 2 * n + p + m || Nred.rows() != 2 * r + p + m)
        throw DimensionMismatch("aprioriLmi: N or Nred has the wrong size");
    const Affine K = v.K.expr();
    const Affine K11 = K.block(0, 0, n, n), K12 = K.block(0, n, n, r), K22 = K.block(n, n, r, r);
    const Affine mu = sdp::Problem::scalar(v.mu, p);
    const Matrix Ip = Matrix::Identity(p, p);
    const Affine tm = sdp::Problem::scalar(v.tau, m);

    // Rows/columns: [n, p, n, m | r, p, r, m].
    const Affine halfMinusMu = cst(0.5 * Ip) - mu;
    const std::vector<std::vector<Affine>> theta = {
        {K11, zero(n, p), zero(n, n), zero(n, m), K12, zero(n, p), zero(n, r), zero(n, m)},
        {zero(p, n), halfMinusMu, zero(p, n), zero(p, m), zero(p, r), -mu, zero(p, r), zero(p, m)},
        {zero(n, n), zero(n, p), -K11, zero(n, m), zero(n, r), zero(n, p), -K12, zero(n, m)},
        {zero(m, n), zero(m, p), zero(m, n), -tm, zero(m, r), zero(m, p), zero(m, r), -tm},
        {K12.transpose(), zero(r, p), zero(r, n), zero(r, m), K22, zero(r, p), zero(r, r), zero(r, m)},
        {zero(p, n), -mu, zero(p, n), zero(p, m), zero(p, r), halfMinusMu, zero(p, r), zero(p, m)},
        {zero(r, n), zero(r, p), -K12.transpose(), zero(r, m), zero(r, r), zero(r, p), -K22, zero(r, m)},
        {zero(m, n), zero(m, p), zero(m, n), -tm, zero(m, r), zero(m, p), zero(m, r), -tm},
    };
    const Index a = N.rows(), b = Nred.rows();
    Matrix Nd = Matrix::Zero(a + b, a + b), Nr = Matrix::Zero(a + b, a + b);
    Nd.topLeftCorner(a, a) = N;
    Nr.bottomRightCorner(b, b) = Nred;
    return Affine::blocks(theta) - Affine::variable(v.delta, Nd) - Affine::variable(v.eta, Nr);
}

Affine aposterioriLmi(const Matrix& N, const StateSpaceModel& rom, const Dims& d, const AposterioriVars& v) {
    const Index n = d.n, m = d.m, p = d.p, r = rom.n();
    if (N.rows() != 2 * n + p + m) throw DimensionMismatch("aposterioriLmi: N has the wrong size");
    if (rom.m() != m || rom.p() != p) throw DimensionMismatch("aposterioriLmi: model has wrong input/output size");
    const Matrix &Ah = rom.A, &Bh = rom.B, &Ch = rom.C, &Dh = rom.D;
    const Affine K = v.K.expr();
    const Affine K11 = K.block(0, 0, n, n), K12 = K.block(0, n, n, r), K22 = K.block(n, n, r, r);
    const Index t = v.tau;

    // Rows/columns: [n, p, n, m, r].
    const std::vector<std::vector<Affine>> table = {
        {K11, zero(n, p), zero(n, n), zero(n, m), K12},
        {zero(p, n), cst(Matrix::Identity(p, p)) - Ch * K22 * Ch.transpose() - tauTimes(t, Dh * Dh.transpose()),
         Ch * K12.transpose(), tauTimes(t, Dh), Ch * K22 * Ah.transpose() + tauTimes(t, Dh * Bh.transpose())},
        {zero(n, n), K12 * Ch.transpose(), -K11, zero(n, m), -(K12 * Ah.transpose())},
        {zero(m, n), tauTimes(t, Dh.transpose()), zero(m, n), -sdp::Problem::scalar(t, m), -tauTimes(t, Bh.transpose())},
        {K12.transpose(), Ah * K22 * Ch.transpose() + tauTimes(t, Bh * Dh.transpose()), -(Ah * K12.transpose()),
         -tauTimes(t, Bh), K22 - Ah * K22 * Ah.transpose() - tauTimes(t, Bh * Bh.transpose())},
    };
    const Index a = N.rows();
    Matrix Nd = Matrix::Zero(a + r, a + r);
    Nd.topLeftCorner(a, a) = N;
    return Affine::blocks(table) - Affine::variable(v.delta, Nd);
}

AprioriBound aprioriBound(const QmiSet& N, const QmiSet& Nred, const Dims& d, Index r, const BoundOptions& opts) {
    qmi::requireRegular(N, "aprioriBound");
    qmi::requireRegular(Nred, "aprioriBound");
    if (Nred.rowDim() != r + d.p || Nred.colDim() != r + d.m)
        throw DimensionMismatch("aprioriBound: reduced set does not match the order");
    const double sN = N.norm(), sR = Nred.norm();
    const Matrix Nn = N.psi() / sN, Rn = Nred.psi() / sR;
    const double eps = informativity::strictMargin(Nn);

    sdp::Problem pr;
    pr.boxBound = kBoundBox;
    AprioriVars v{pr.addSymmetric("K", d.n + r), pr.addScalar("mu"), pr.addScalar("tau"), pr.addScalar("delta"),
                  pr.addScalar("eta")};
    pr.addLmi(aprioriLmi(Nn, Rn, d, r, v), eps, "a priori bound LMI");
    pr.addLmi(v.K.expr(), eps, "K > 0");
    pr.addLmi(sdp::Problem::scalar(v.tau), eps, "tau > 0");
    pr.addLmi(sdp::Problem::scalar(v.delta), eps, "delta > 0");
    pr.addLmi(sdp::Problem::scalar(v.eta), eps, "eta > 0");
    pr.maximize(sdp::Problem::scalar(v.tau));

    const sdp::Solution sol = runSdp(pr, opts);
    if (!sol.feasible()) {
        if (sol.status == sdp::Status::Infeasible) throw Infeasible("a priori bound LMI is infeasible");
        throw SolverError("a priori bound SDP failed", sdp::toString(sol.status));
    }
    AprioriBound out;
    out.tau = sol.y(v.tau);
    out.gamma = 1.0 / std::sqrt(out.tau);
    out.K = v.K.value(sol.y);
    out.mu = sol.y(v.mu);
    out.delta = sol.y(v.delta) / sN;
    out.eta = sol.y(v.eta) / sR;
    out.margin = *std::min_element(sol.lmiMinEig.begin(), sol.lmiMinEig.end());
    out.epsilon = eps;
    out.solverStatus = sdp::toString(sol.status);
    return out;
}

AposterioriBound aposterioriBound(const QmiSet& N, const StateSpaceModel& rom, const Dims& d, const BoundOptions& opts) {
    qmi::requireRegular(N, "aposterioriBound");
    rom.validate();
    const double sN = N.norm();
    const Matrix Nn = N.psi() / sN;
    const double eps = informativity::strictMargin(Nn);

    sdp::Problem pr;
    pr.boxBound = kBoundBox;
    AposterioriVars v{pr.addSymmetric("K", d.n + rom.n()), pr.addScalar("tau"), pr.addScalar("delta")};
    pr.addLmi(aposterioriLmi(Nn, rom, d, v), eps, "a posteriori bound LMI");
    pr.addLmi(v.K.expr(), eps, "K > 0");
    pr.addLmi(sdp::Problem::scalar(v.tau), eps, "tau > 0");
    pr.addLmi(sdp::Problem::scalar(v.delta), eps, "delta > 0");
    pr.maximize(sdp::Problem::scalar(v.tau));

    const sdp::Solution sol = runSdp(pr, opts);
    if (!sol.feasible()) {
        if (sol.status == sdp::Status::Infeasible) throw Infeasible("a posteriori bound LMI is infeasible");
        throw SolverError("a posteriori bound SDP failed", sdp::toString(sol.status));
    }
    AposterioriBound out;
    out.tau0 = sol.y(v.tau);
    out.gamma0 = 1.0 / std::sqrt(out.tau0);
    out.K = v.K.value(sol.y);
    out.delta = sol.y(v.delta) / sN;
    out.margin = *std::min_element(sol.lmiMinEig.begin(), sol.lmiMinEig.end());
    out.epsilon = eps;
    out.solverStatus = sdp::toString(sol.status);
    return out;
}

StateSpaceModel assembleErrorSystem(const StateSpaceModel& full, const StateSpaceModel& rom) {
    full.validate();
    rom.validate();
    if (full.m() != rom.m() || full.p() != rom.p())
        throw DimensionMismatch("assembleErrorSystem: input/output sizes differ");
    StateSpaceModel e;
    e.A = linalg::blkdiag(full.A, rom.A);
    e.B.resize(full.n() + rom.n(), full.m());
    e.B << full.B, rom.B;
    e.C.resize(full.p(), full.n() + rom.n());
    e.C << full.C, -rom.C;
    e.D = full.D - rom.D;
    return e;
}

namespace {

struct PencilTest {
    bool upper = false;   // no unit-circle crossing: γ > ‖G‖∞
    bool clean = true;    // decision not blurred by near-circle eigenvalues
    double witness = 0;   // largest σmax(G) seen at candidate frequencies
    double angle = 0;
};

// Frequencies where γ is a singular value of G(e^{iω}) are the unit-circle
// eigenvalues of F − zE with u = R⁻¹(DᵀC x + Bᵀ q) eliminated:
// F = [A + B R⁻¹ DᵀC, B R⁻¹ Bᵀ; 0, I], E = [I, 0; CᵀC + CᵀD R⁻¹ DᵀC, Aᵀ + CᵀD R⁻¹ Bᵀ].
PencilTest testLevel(const StateSpaceModel& s, double gamma) {
    const Index n = s.n(), m = s.m();
    const Matrix R = gamma * gamma * Matrix::Identity(m, m) - s.D.transpose() * s.D;
    const Eigen::LLT<Matrix> Rf(R);
    const Matrix RiDC = Rf.solve(s.D.transpose() * s.C);
    const Matrix RiBt = Rf.solve(s.B.transpose());
    Matrix F = Matrix::Zero(2 * n, 2 * n), E = Matrix::Zero(2 * n, 2 * n);
    F.topLeftCorner(n, n) = s.A + s.B * RiDC;
    F.topRightCorner(n, n) = s.B * RiBt;
    F.bottomRightCorner(n, n).setIdentity();
    E.topLeftCorner(n, n).setIdentity();
    E.bottomLeftCorner(n, n) = s.C.transpose() * s.C + s.C.transpose() * s.D * RiDC;
    E.bottomRightCorner(n, n) = s.A.transpose() + s.C.transpose() * s.D * RiBt;

    Eigen::GeneralizedEigenSolver<Matrix> ges(F, E, false);
    std::vector<double> angles;
    for (Index i = 0; i < 2 * n; ++i) {
        const std::complex<double> a = ges.alphas()(i);
        const double b = ges.betas()(i);
        if (std::abs(b) <= 1e-14 * std::abs(a)) continue;  // infinite eigenvalue
        const std::complex<double> z = a / b;
        if (std::abs(std::abs(z) - 1.0) < 1e-6) angles.push_back(std::abs(std::arg(z)));
    }
    PencilTest t;
    if (angles.empty()) {
        t.upper = true;
        return t;
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> probes = angles;
    for (size_t i = 0; i + 1 < angles.size(); ++i) probes.push_back(0.5 * (angles[i] + angles[i + 1]));
    for (double w : probes) {
        const double g = s.gainAt(w);
        if (g > t.witness) {
            t.witness = g;
            t.angle = w;
        }
    }
    if (t.witness >= gamma) return t;
    // Near-circle eigenvalues without a frequency witness: treat γ as an upper bound.
    t.upper = true;
    t.clean = false;
    return t;
}

}  // namespace

HinfResult hinfNorm(const StateSpaceModel& model, double tol, kernels::Policy policy) {
    model.validate();
    const double rho = linalg::spectralRadius(model.A);
    if (model.n() > 0 && rho >= 1.0) throw Unstable("hinfNorm: spectral radius " + std::to_string(rho) + " >= 1");
    HinfResult res;
    res.tolerance = tol;
    const double dnorm = linalg::norm2(model.D);
    if (model.n() == 0 || model.B.norm() == 0.0 || model.C.norm() == 0.0) {
        res.norm = res.lower = res.upper = dnorm;
        res.certified = true;
        return res;
    }

    // Lower end: any frequency response value (the mean of G over the circle is D).
    std::vector<double> probes;
    const Index gridN = 64;
    for (Index i = 0; i <= gridN; ++i) probes.push_back(std::numbers::pi * static_cast<double>(i) / gridN);
    Eigen::EigenSolver<Matrix> es(model.A, false);
    for (Index i = 0; i < es.eigenvalues().size(); ++i) probes.push_back(std::abs(std::arg(es.eigenvalues()(i))));
    const kernels::GridPeak peak = kernels::gridMaximum(probes, [&](double w) { return model.gainAt(w); }, policy);
    double lower = std::max(dnorm, peak.value);
    res.peakFrequency = probes[peak.index];

    bool certified = true;
    double upper = linalg::norm2(model.C) * linalg::norm2(model.B) / (1.0 - rho) + dnorm;
    upper = std::max(upper, 2.0 * lower);
    for (int k = 0; k < 200; ++k) {
        const PencilTest t = testLevel(model, upper);
        if (t.upper) {
            certified = certified && t.clean;
            break;
        }
        if (t.witness > lower) {
            lower = t.witness;
            res.peakFrequency = t.angle;
        }
        upper *= 2.0;
    }

    int it = 0;
    for (; it < 300 && upper - lower > tol * (1.0 + lower); ++it) {
        const double gamma = 0.5 * (lower + upper);
        const PencilTest t = testLevel(model, gamma);
        if (t.upper) {
            upper = gamma;
            certified = certified && t.clean;
        } else {
            lower = std::min(std::max(lower, t.witness), upper);
            if (t.witness >= lower) res.peakFrequency = t.angle;
        }
    }
    res.iterations = it;
    res.lower = lower;
    res.upper = upper;
    res.norm = 0.5 * (lower + upper);
    res.certified = certified && upper - lower <= tol * (1.0 + lower);
    return res;
}

bool boundedRealFeasible(const StateSpaceModel& s, double gamma, const BoundOptions& opts) {
    s.validate();
    const Index n = s.n(), m = s.m();
    sdp::Problem pr;
    const sdp::SymmetricVariable X = pr.addSymmetric("X", n);
    const Affine Xe = X.expr();
    const Matrix AB = [&] {
        Matrix M(n, n + m);
        M << s.A, s.B;
        return M;
    }();
    const Matrix CD = [&] {
        Matrix M(s.p(), n + m);
        M << s.C, s.D;
        return M;
    }();
    // [A B]ᵀ X [A B] − blkdiag(X, γ² I) + [C D]ᵀ[C D] ≺ 0
    const Affine lhs = AB.transpose() * Xe * AB -
                       Affine::blocks({{Xe, zero(n, m)}, {zero(m, n), cst(gamma * gamma * Matrix::Identity(m, m))}}) +
                       cst(CD.transpose() * CD);
    const double eps = 1e-9 * (1.0 + gamma * gamma);
    pr.addLmi(-lhs, eps, "bounded real LMI");
    pr.addLmi(Xe, eps, "X > 0");
    return runSdp(pr, opts).feasible();
}

double gridPeak(const StateSpaceModel& model, Index points, kernels::Policy policy) {
    std::vector<double> grid(static_cast<size_t>(points));
    for (Index i = 0; i < points; ++i)
        grid[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<Index>(points - 1, 1));
    return kernels::gridMaximum(grid, [&](double w) { return model.gainAt(w); }, policy).value;
}

}  // namespace ddbt::bounds
