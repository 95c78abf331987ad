#include "ddbt/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddbt/errors.hpp"

namespace ddbt::sdp {

// ---------------------------------------------------------------- Affine

Affine::Affine(Index rows, Index cols) : c0_(Matrix::Zero(rows, cols)) {}

Affine Affine::constant(const Matrix& M) {
    Affine a;
    a.c0_ = M;
    return a;
}

Affine Affine::variable(Index var, const Matrix& coef) {
    Affine a(coef.rows(), coef.cols());
    a.terms_[var] = coef;
    return a;
}

Affine& Affine::operator+=(const Affine& o) {
    if (rows() != o.rows() || cols() != o.cols()) throw DimensionMismatch("Affine: size mismatch in sum");
    c0_ += o.c0_;
    for (const auto& [k, M] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(k, M);
        else
            it->second += M;
    }
    return *this;
}

Affine& Affine::operator-=(const Affine& o) { return *this += -o; }

Affine& Affine::operator*=(double s) {
    c0_ *= s;
    for (auto& [k, M] : terms_) M *= s;
    return *this;
}

Affine Affine::operator-() const {
    Affine a = *this;
    a *= -1.0;
    return a;
}

Affine Affine::transpose() const {
    Affine a = constant(c0_.transpose());
    for (const auto& [k, M] : terms_) a.terms_.emplace(k, M.transpose());
    return a;
}

Affine Affine::block(Index i, Index j, Index r, Index c) const {
    Affine a = constant(c0_.block(i, j, r, c));
    for (const auto& [k, M] : terms_) a.terms_.emplace(k, M.block(i, j, r, c));
    return a;
}

Matrix Affine::evaluate(const Vector& y) const {
    Matrix out = c0_;
    for (const auto& [k, M] : terms_) {
        if (k >= y.size()) throw DimensionMismatch("Affine: variable index out of range");
        out += y(k) * M;
    }
    return out;
}

Affine Affine::blocks(const std::vector<std::vector<Affine>>& grid) {
    if (grid.empty() || grid[0].empty()) return Affine(0, 0);
    const size_t nr = grid.size(), nc = grid[0].size();
    std::vector<Index> h(nr), w(nc);
    for (size_t i = 0; i < nr; ++i) h[i] = grid[i][0].rows();
    for (size_t j = 0; j < nc; ++j) w[j] = grid[0][j].cols();
    Index H = 0, W = 0;
    for (Index v : h) H += v;
    for (Index v : w) W += v;
    Affine out(H, W);
    Index r0 = 0;
    for (size_t i = 0; i < nr; ++i) {
        if (grid[i].size() != nc) throw DimensionMismatch("Affine::blocks: ragged block grid");
        Index c0 = 0;
        for (size_t j = 0; j < nc; ++j) {
            const Affine& b = grid[i][j];
            if (b.rows() != h[i] || b.cols() != w[j])
                throw DimensionMismatch("Affine::blocks: inconsistent block sizes");
            out.c0_.block(r0, c0, h[i], w[j]) = b.c0_;
            for (const auto& [k, M] : b.terms_) {
                auto it = out.terms_.find(k);
                if (it == out.terms_.end()) it = out.terms_.emplace(k, Matrix::Zero(H, W)).first;
                it->second.block(r0, c0, h[i], w[j]) += M;
            }
            c0 += w[j];
        }
        r0 += h[i];
    }
    return out;
}

Affine operator*(const Matrix& L, const Affine& a) {
    if (L.cols() != a.rows()) throw DimensionMismatch("Affine: size mismatch in product");
    Affine out = Affine::constant(L * a.c0_);
    for (const auto& [k, M] : a.terms_) out.terms_.emplace(k, L * M);
    return out;
}

Affine operator*(const Affine& a, const Matrix& R) {
    if (a.cols() != R.rows()) throw DimensionMismatch("Affine: size mismatch in product");
    Affine out = Affine::constant(a.c0_ * R);
    for (const auto& [k, M] : a.terms_) out.terms_.emplace(k, M * R);
    return out;
}

Affine operator+(Affine a, const Affine& b) { return a += b; }
Affine operator-(Affine a, const Affine& b) { return a -= b; }
Affine operator*(double s, Affine a) { return a *= s; }
Affine zeros(Index rows, Index cols) { return Affine(rows, cols); }

Affine SymmetricVariable::expr() const {
    Affine a(dim, dim);
    Index k = offset;
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i <= j; ++i, ++k) {
            Matrix E = Matrix::Zero(dim, dim);
            E(i, j) = 1.0;
            E(j, i) = 1.0;
            a += Affine::variable(k, E);
        }
    }
    return a;
}

Matrix SymmetricVariable::value(const Vector& y) const {
    Matrix M(dim, dim);
    Index k = offset;
    for (Index j = 0; j < dim; ++j)
        for (Index i = 0; i <= j; ++i, ++k) M(i, j) = M(j, i) = y(k);
    return M;
}

// ---------------------------------------------------------------- Problem

Index Problem::addScalar(const std::string& name) {
    names_.push_back(name);
    return numVariables() - 1;
}

SymmetricVariable Problem::addSymmetric(const std::string& name, Index dim) {
    SymmetricVariable v{numVariables(), dim};
    for (Index j = 0; j < dim; ++j)
        for (Index i = 0; i <= j; ++i)
            names_.push_back(name + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return v;
}

Affine Problem::scalar(Index var, Index dim) { return Affine::variable(var, Matrix::Identity(dim, dim)); }

void Problem::addLmi(const Affine& expr, double margin, const std::string& name) {
    if (expr.rows() != expr.cols() || expr.rows() == 0) throw DimensionMismatch("LMI " + name + " is not square");
    lmis_.push_back({expr, margin, name});
}

void Problem::maximize(const Affine& objective) {
    if (objective.rows() != 1 || objective.cols() != 1) throw DimensionMismatch("objective must be 1x1");
    objective_ = Vector::Zero(numVariables());
    for (const auto& [k, M] : objective.terms()) {
        if (k >= numVariables()) throw DimensionMismatch("objective uses an undeclared variable");
        objective_(k) = M(0, 0);
    }
    hasObjective_ = true;
}

std::string toString(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::IterationLimit: return "iteration_limit";
        case Status::NumericalFailure: return "numerical_failure";
    }
    return "unknown";
}

bool Solution::feasible() const {
    if (y.size() == 0) return false;
    return std::all_of(lmiMinEig.begin(), lmiMinEig.end(), [](double v) { return v > 0.0; });
}

// ---------------------------------------------------------------- standard form

namespace {

// max bᵀy  s.t.  C_b − Σ yᵢ A_{b,i} ⪰ 0 (dense blocks),  c − A y ≥ 0 (linear block).
struct Standard {
    Index m = 0;
    Vector b;
    std::vector<kernels::DenseBlock> dense;
    Vector lpC;
    Matrix lpA;
    Index userLp = 0;  // leading linear rows that come from user LMIs
};

Standard toStandard(const Problem& pr, bool phaseOne, double tcap) {
    const Index nv = pr.numVariables();
    Standard s;
    s.m = nv + (phaseOne ? 1 : 0);
    const Index t = nv;
    std::vector<std::pair<double, Vector>> lpRows;
    auto lpRow = [&](double c) {
        lpRows.emplace_back(c, Vector::Zero(s.m));
        return &lpRows.back().second;
    };
    for (const Lmi& l : pr.lmis()) {
        const Index d = l.expr.rows();
        if (d == 1) {
            Vector* a = lpRow(l.expr.constantTerm()(0, 0) - l.margin);
            for (const auto& [k, M] : l.expr.terms()) (*a)(k) = -M(0, 0);
            if (phaseOne) (*a)(t) = 1.0;
            continue;
        }
        kernels::DenseBlock blk;
        blk.C = linalg::symmetrize(l.expr.constantTerm()) - l.margin * Matrix::Identity(d, d);
        for (const auto& [k, M] : l.expr.terms()) {
            if (k >= nv) throw DimensionMismatch("LMI " + l.name + " uses an undeclared variable");
            const Matrix S = linalg::symmetrize(M);
            if (S.cwiseAbs().maxCoeff() == 0.0) continue;
            blk.vars.push_back(k);
            blk.A.push_back(-S);
        }
        if (phaseOne) {
            blk.vars.push_back(t);
            blk.A.push_back(Matrix::Identity(d, d));
        }
        s.dense.push_back(std::move(blk));
    }
    s.userLp = static_cast<Index>(lpRows.size());
    for (Index i = 0; i < nv; ++i) {
        (*lpRow(pr.boxBound))(i) = 1.0;
        (*lpRow(pr.boxBound))(i) = -1.0;
    }
    if (phaseOne) (*lpRow(tcap))(t) = 1.0;

    s.lpC.resize(static_cast<Index>(lpRows.size()));
    s.lpA.resize(static_cast<Index>(lpRows.size()), s.m);
    for (size_t r = 0; r < lpRows.size(); ++r) {
        s.lpC(r) = lpRows[r].first;
        s.lpA.row(r) = lpRows[r].second.transpose();
    }
    s.b = Vector::Zero(s.m);
    if (phaseOne)
        s.b(t) = 1.0;
    else if (pr.hasObjective())
        s.b = pr.objective();
    return s;
}

Matrix applyAt(const kernels::DenseBlock& blk, const Vector& y) {
    Matrix out = Matrix::Zero(blk.C.rows(), blk.C.cols());
    for (size_t k = 0; k < blk.vars.size(); ++k)
        if (y(blk.vars[k]) != 0.0) out += y(blk.vars[k]) * blk.A[k];
    return out;
}

// A(X)ᵢ = Σ_b A_{b,i} • X_b + (lpAᵀ x)ᵢ
Vector applyA(const Standard& s, const std::vector<Matrix>& X, const Vector& x) {
    Vector out = s.lpA.transpose() * x;
    for (size_t b = 0; b < s.dense.size(); ++b) {
        const auto& blk = s.dense[b];
        for (size_t k = 0; k < blk.vars.size(); ++k) out(blk.vars[k]) += blk.A[k].cwiseProduct(X[b]).sum();
    }
    return out;
}

Index totalDim(const Standard& s) {
    Index n = s.lpC.size();
    for (const auto& blk : s.dense) n += blk.C.rows();
    return n;
}

bool choleskyInverse(const Matrix& Z, Matrix& inv) {
    Eigen::LLT<Matrix> llt(Z);
    if (llt.info() != Eigen::Success) return false;
    inv = linalg::symmetrize(llt.solve(Matrix::Identity(Z.rows(), Z.cols())));
    return inv.allFinite();
}

// Largest α with X + α dX ⪰ 0 (infinity if unbounded).
double maxStep(const Matrix& X, const Matrix& dX) {
    Eigen::LLT<Matrix> llt(X);
    if (llt.info() != Eigen::Success) return 0.0;
    const Matrix L = llt.matrixL();
    const Matrix Li = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(X.rows(), X.cols()));
    const double lmin = linalg::minEigenvalue(linalg::symmetrize(Li * dX * Li.transpose()));
    return lmin >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

double maxStep(const Vector& x, const Vector& dx) {
    double a = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < x.size(); ++i)
        if (dx(i) < 0) a = std::min(a, -x(i) / dx(i));
    return a;
}

struct CoreResult {
    Vector y;
    int iterations = 0;
    bool converged = false;
    bool failed = false;
};

// Looser tolerance accepted when round-off stalls the iteration just short of the target.
constexpr double kAcceptableTol = 1e-6;

Matrix schurMatrix(const Standard& s, const std::vector<Matrix>& X, const std::vector<Matrix>& Zinv,
                   const Vector& lpWeight, kernels::Policy policy) {
    Matrix M = s.lpA.transpose() * lpWeight.asDiagonal() * s.lpA;
    for (size_t b = 0; b < s.dense.size(); ++b) kernels::addSchurBlock(s.dense[b], X[b], Zinv[b], M, policy);
    return linalg::symmetrize(M);
}

// Factors the Schur matrix, nudging the diagonal if round-off destroyed definiteness.
bool factorSchur(const Matrix& M, Eigen::LLT<Matrix>& llt) {
    llt.compute(M);
    double shift = 1e-14 * std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
    for (int k = 0; k < 6 && llt.info() != Eigen::Success; ++k, shift *= 100)
        llt.compute(M + shift * Matrix::Identity(M.rows(), M.cols()));
    return llt.info() == Eigen::Success;
}

// ---------------------------------------------------------------- primal–dual core

CoreResult ipmCore(const Standard& s, Vector y, const SolverOptions& o) {
    const size_t nb = s.dense.size();
    const Index ntot = totalDim(s);
    std::vector<Matrix> X(nb), Z(nb), Zinv(nb), Rd(nb);
    for (size_t b = 0; b < nb; ++b) Z[b] = s.dense[b].C - applyAt(s.dense[b], y);
    Vector z = s.lpC - s.lpA * y;
    if ((z.array() <= 0).any()) throw SolverError("interior-point start is not interior", "bad_start");

    const double xi = std::max(1.0, s.b.cwiseAbs().maxCoeff());
    for (size_t b = 0; b < nb; ++b) {
        if (!choleskyInverse(Z[b], Zinv[b])) throw SolverError("interior-point start is not interior", "bad_start");
        X[b] = xi * Zinv[b];
    }
    Vector x = xi * z.cwiseInverse();

    CoreResult res;
    const double bnorm = 1.0 + s.b.norm();
    double cnorm = 1.0 + s.lpC.norm();
    for (const auto& blk : s.dense) cnorm += blk.C.norm();

    Vector lastY = y;
    bool lastAcceptable = false;
    auto stall = [&]() {
        res.y = lastY;
        res.converged = lastAcceptable;
        res.failed = !lastAcceptable;
        return res;
    };
    for (int it = 0; it < o.maxIterations; ++it) {
        res.iterations = it;
        for (size_t b = 0; b < nb; ++b)
            if (!choleskyInverse(Z[b], Zinv[b])) return stall();
        const Vector rp = s.b - applyA(s, X, x);
        double dres = 0.0, gap = x.dot(z), pobj = s.lpC.dot(x);
        for (size_t b = 0; b < nb; ++b) {
            Rd[b] = s.dense[b].C - Z[b] - applyAt(s.dense[b], y);
            dres += Rd[b].norm();
            gap += X[b].cwiseProduct(Z[b]).sum();
            pobj += s.dense[b].C.cwiseProduct(X[b]).sum();
        }
        const Vector rd = s.lpC - z - s.lpA * y;
        dres += rd.norm();
        const double dobj = s.b.dot(y);
        const double mu = gap / static_cast<double>(ntot);
        const double relgap = std::abs(gap) / (1.0 + std::abs(pobj) + std::abs(dobj));
        if (!std::isfinite(relgap)) return stall();
        if (relgap < o.gapTol && rp.norm() / bnorm < o.feasTol && dres / cnorm < o.feasTol) {
            res.converged = true;
            break;
        }
        lastY = y;
        lastAcceptable = relgap < kAcceptableTol && rp.norm() / bnorm < kAcceptableTol && dres / cnorm < kAcceptableTol;

        const Vector lpW = x.cwiseQuotient(z);
        Eigen::LLT<Matrix> llt;
        if (!factorSchur(schurMatrix(s, X, Zinv, lpW, o.policy), llt)) return stall();

        struct Dir {
            Vector dy, dx, dz;
            std::vector<Matrix> dX, dZ;
        };
        // Solves for the direction given the complementarity targets G (dense) and g (linear).
        auto direction = [&](const std::vector<Matrix>& G, const Vector& g) {
            std::vector<Matrix> XRdZ(nb);
            for (size_t b = 0; b < nb; ++b) XRdZ[b] = X[b] * Rd[b] * Zinv[b];
            const Vector rhs = rp - applyA(s, G, g) + applyA(s, XRdZ, x.cwiseProduct(rd).cwiseQuotient(z));
            Dir d;
            d.dy = llt.solve(rhs);
            d.dz = rd - s.lpA * d.dy;
            d.dx = g - x.cwiseProduct(d.dz).cwiseQuotient(z);
            d.dX.resize(nb);
            d.dZ.resize(nb);
            for (size_t b = 0; b < nb; ++b) {
                d.dZ[b] = linalg::symmetrize(Rd[b] - applyAt(s.dense[b], d.dy));
                d.dX[b] = G[b] - linalg::symmetrize(X[b] * d.dZ[b] * Zinv[b]);
            }
            return d;
        };
        auto steps = [&](const Dir& d, double& ap, double& ad) {
            ap = maxStep(x, d.dx);
            ad = maxStep(z, d.dz);
            for (size_t b = 0; b < nb; ++b) {
                ap = std::min(ap, maxStep(X[b], d.dX[b]));
                ad = std::min(ad, maxStep(Z[b], d.dZ[b]));
            }
        };

        // Predictor (affine scaling).
        std::vector<Matrix> G(nb);
        for (size_t b = 0; b < nb; ++b) G[b] = -X[b];
        const Dir pred = direction(G, -x);
        double ap, ad;
        steps(pred, ap, ad);
        ap = std::min(1.0, ap);
        ad = std::min(1.0, ad);
        double gapAff = (x + ap * pred.dx).dot(z + ad * pred.dz);
        for (size_t b = 0; b < nb; ++b)
            gapAff += (X[b] + ap * pred.dX[b]).cwiseProduct(Z[b] + ad * pred.dZ[b]).sum();
        const double sigma = std::clamp(std::pow(std::max(gapAff, 0.0) / gap, 3.0), 0.0, 1.0);

        // Corrector.
        for (size_t b = 0; b < nb; ++b) {
            const Index d = X[b].rows();
            const Matrix T = (sigma * mu * Matrix::Identity(d, d) - pred.dX[b] * pred.dZ[b]) * Zinv[b];
            G[b] = linalg::symmetrize(T) - X[b];
        }
        const Vector g = (Vector::Constant(x.size(), sigma * mu) - pred.dx.cwiseProduct(pred.dz)).cwiseQuotient(z) - x;
        const Dir corr = direction(G, g);
        steps(corr, ap, ad);
        const double gamma = 0.95;
        ap = std::min(1.0, gamma * ap);
        ad = std::min(1.0, gamma * ad);

        x += ap * corr.dx;
        z += ad * corr.dz;
        y += ad * corr.dy;
        for (size_t b = 0; b < nb; ++b) {
            X[b] = linalg::symmetrize(X[b] + ap * corr.dX[b]);
            Z[b] = linalg::symmetrize(Z[b] + ad * corr.dZ[b]);
        }
        res.iterations = it + 1;
    }
    if (!res.converged) return stall();
    res.y = y;
    return res;
}

// ---------------------------------------------------------------- barrier core

CoreResult barrierCore(const Standard& s, Vector y, const SolverOptions& o) {
    const size_t nb = s.dense.size();
    const double ntot = static_cast<double>(totalDim(s));
    CoreResult res;

    // φ(y) = −t bᵀy − Σ log det Z_b(y) − Σ log z_k(y); +∞ outside the domain.
    auto phi = [&](const Vector& v, double t) {
        const Vector z = s.lpC - s.lpA * v;
        if ((z.array() <= 0).any()) return std::numeric_limits<double>::infinity();
        double val = -t * s.b.dot(v) - z.array().log().sum();
        for (const auto& blk : s.dense) {
            Eigen::LLT<Matrix> llt(blk.C - applyAt(blk, v));
            if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
            const Matrix L = llt.matrixL();
            val -= 2.0 * L.diagonal().array().log().sum();
        }
        return val;
    };

    double t = 1.0;
    int total = 0;
    for (int outer = 0; outer < 60; ++outer) {
        for (int inner = 0; inner < 80; ++inner, ++total) {
            const Vector z = s.lpC - s.lpA * y;
            const Vector zi = z.cwiseInverse();
            Vector grad = -t * s.b + s.lpA.transpose() * zi;
            std::vector<Matrix> Zinv(nb);
            for (size_t b = 0; b < nb; ++b) {
                if (!choleskyInverse(s.dense[b].C - applyAt(s.dense[b], y), Zinv[b])) {
                    res.failed = true;
                    res.y = y;
                    return res;
                }
                const auto& blk = s.dense[b];
                for (size_t k = 0; k < blk.vars.size(); ++k)
                    grad(blk.vars[k]) += blk.A[k].cwiseProduct(Zinv[b]).sum();
            }
            Eigen::LLT<Matrix> llt;
            if (!factorSchur(schurMatrix(s, Zinv, Zinv, zi.cwiseProduct(zi), o.policy), llt)) {
                res.failed = true;
                res.y = y;
                return res;
            }
            const Vector dy = -llt.solve(grad);
            const double dec = -grad.dot(dy);
            if (dec < 1e-12) break;
            const double f0 = phi(y, t);
            double step = 1.0;
            while (step > 1e-12 && phi(y + step * dy, t) > f0 - 0.25 * step * dec) step *= 0.5;
            if (step <= 1e-12) break;
            y += step * dy;
        }
        if (ntot / t < o.gapTol * (1.0 + std::abs(s.b.dot(y)))) {
            res.converged = true;
            break;
        }
        t *= 8.0;
    }
    res.iterations = total;
    res.y = y;
    return res;
}

using Core = CoreResult (*)(const Standard&, Vector, const SolverOptions&);

Solution solveTwoPhase(const Problem& pr, const SolverOptions& o, Core core, const std::string& name) {
    const Index nv = pr.numVariables();
    Solution sol;
    sol.backend = name;

    // Phase I: maximize a uniform slack t on every user constraint.
    const double tcap = 1.0;
    const Standard s1 = toStandard(pr, true, tcap);
    double t0 = 0.0;
    for (const auto& blk : s1.dense) t0 = std::min(t0, linalg::minEigenvalue(blk.C));
    for (Index r = 0; r < s1.userLp; ++r) t0 = std::min(t0, s1.lpC(r));
    Vector y0 = Vector::Zero(s1.m);
    y0(nv) = t0 - 1.0;
    const CoreResult r1 = core(s1, y0, o);
    sol.iterations = r1.iterations;
    sol.phaseOneValue = r1.y(nv);
    sol.y = r1.y.head(nv);

    auto finish = [&](Status st) {
        sol.status = st;
        sol.lmiMinEig.clear();
        for (const Lmi& l : pr.lmis())
            sol.lmiMinEig.push_back(linalg::minEigenvalue(linalg::symmetrize(l.expr.evaluate(sol.y))) - l.margin);
        sol.objective = pr.hasObjective() ? pr.objective().dot(sol.y) : 0.0;
        sol.boxActive = nv > 0 && sol.y.cwiseAbs().maxCoeff() > 0.999 * pr.boxBound;
        return sol;
    };

    if (sol.phaseOneValue <= 0.0)
        return finish(r1.converged ? Status::Infeasible : Status::NumericalFailure);
    if (!pr.hasObjective()) return finish(Status::Optimal);

    const Standard s2 = toStandard(pr, false, tcap);
    CoreResult r2;
    try {
        r2 = core(s2, sol.y, o);
    } catch (const SolverError&) {
        // Phase I point too close to the boundary to restart from; report it as is.
        return finish(Status::NumericalFailure);
    }
    sol.iterations += r2.iterations;
    // The optimum sits on the margin boundary, where round-off may leave the
    // final iterate marginally outside; pull it toward the strictly feasible
    // phase I point by the smallest fraction that restores feasibility.
    const Vector y1 = sol.y;
    auto strictlyFeasible = [&](const Vector& v) {
        for (const Lmi& l : pr.lmis())
            if (linalg::minEigenvalue(linalg::symmetrize(l.expr.evaluate(v))) - l.margin <= 0.0) return false;
        return true;
    };
    sol.y = r2.y;
    for (double lambda = 1e-10; !strictlyFeasible(sol.y) && lambda <= 1.0; lambda *= 10.0)
        sol.y = (1.0 - lambda) * r2.y + lambda * y1;
    return finish(r2.converged ? Status::Optimal : (r2.failed ? Status::NumericalFailure : Status::IterationLimit));
}

}  // namespace

Solution InteriorPointBackend::solve(const Problem& problem, const SolverOptions& opts) const {
    return solveTwoPhase(problem, opts, &ipmCore, name());
}

Solution BarrierBackend::solve(const Problem& problem, const SolverOptions& opts) const {
    return solveTwoPhase(problem, opts, &barrierCore, name());
}

const Backend& defaultBackend() {
    static const InteriorPointBackend backend;
    return backend;
}

}  // namespace ddbt::sdp
