#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ddbt/kernels.hpp"
#include "ddbt/linalg.hpp"

namespace ddbt::sdp {

// Matrix-valued affine expression  C₀ + Σ yᵢ Cᵢ  in the decision vector y.
class Affine {
public:
    Affine() = default;
    Affine(Index rows, Index cols);

    static Affine constant(const Matrix& M);
    static Affine variable(Index var, const Matrix& coef);

    Index rows() const { return c0_.rows(); }
    Index cols() const { return c0_.cols(); }
    const Matrix& constantTerm() const { return c0_; }
    const std::map<Index, Matrix>& terms() const { return terms_; }

    Affine& operator+=(const Affine& o);
    Affine& operator-=(const Affine& o);
    Affine& operator*=(double s);
    Affine operator-() const;
    Affine transpose() const;
    Affine block(Index i, Index j, Index r, Index c) const;
    Matrix evaluate(const Vector& y) const;

    // Assembles a block matrix; every block in a block-row shares its row count
    // and every block-column its column count.
    static Affine blocks(const std::vector<std::vector<Affine>>& grid);

    friend Affine operator*(const Matrix& L, const Affine& a);
    friend Affine operator*(const Affine& a, const Matrix& R);

private:
    Matrix c0_;
    std::map<Index, Matrix> terms_;
};

Affine operator+(Affine a, const Affine& b);
Affine operator-(Affine a, const Affine& b);
Affine operator*(double s, Affine a);
// Shorthand for a zero block.
Affine zeros(Index rows, Index cols);

struct SymmetricVariable {
    Index offset = 0;
    Index dim = 0;
    Affine expr() const;
    Matrix value(const Vector& y) const;
};

struct Lmi {
    Affine expr;  // required: expr ⪰ margin·I (symmetrized)
    double margin = 0.0;
    std::string name;
};

class Problem {
public:
    Index addScalar(const std::string& name);
    SymmetricVariable addSymmetric(const std::string& name, Index dim);
    // y[var]·I_dim
    static Affine scalar(Index var, Index dim = 1);

    void addLmi(const Affine& expr, double margin, const std::string& name);
    // Objective: maximize the 1×1 affine expression (use −expr to minimize).
    void maximize(const Affine& objective);

    Index numVariables() const { return static_cast<Index>(names_.size()); }
    const std::vector<Lmi>& lmis() const { return lmis_; }
    const Vector& objective() const { return objective_; }
    bool hasObjective() const { return hasObjective_; }
    const std::string& variableName(Index i) const { return names_[i]; }

    // Every variable is confined to |yᵢ| ≤ boxBound (keeps the problem bounded).
    double boxBound = 1e6;

private:
    std::vector<std::string> names_;
    std::vector<Lmi> lmis_;
    Vector objective_;
    bool hasObjective_ = false;
};

enum class Status { Optimal, Infeasible, IterationLimit, NumericalFailure };
std::string toString(Status s);

struct Solution {
    Status status = Status::NumericalFailure;
    Vector y;
    double objective = 0.0;
    std::vector<double> lmiMinEig;  // λmin(exprᵢ(y)) − marginᵢ, per LMI
    double phaseOneValue = 0.0;     // largest uniform slack found by phase I
    int iterations = 0;
    bool boxActive = false;
    std::string backend;

    // Whether y satisfies every LMI with its margin.
    bool feasible() const;
};

struct SolverOptions {
    double gapTol = 1e-9;
    double feasTol = 1e-9;
    int maxIterations = 200;
    kernels::Policy policy = kernels::Policy::Serial;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual Solution solve(const Problem& problem, const SolverOptions& opts = {}) const = 0;
    virtual std::string name() const = 0;
    // Backends that are not thread safe get serialized by their callers.
    virtual bool threadSafe() const = 0;
};

// Primal–dual interior point (HKM direction, Mehrotra predictor–corrector).
class InteriorPointBackend : public Backend {
public:
    Solution solve(const Problem& problem, const SolverOptions& opts = {}) const override;
    std::string name() const override { return "primal-dual-ipm"; }
    bool threadSafe() const override { return true; }
};

// Log-barrier Newton method; slower, independent fallback.
class BarrierBackend : public Backend {
public:
    Solution solve(const Problem& problem, const SolverOptions& opts = {}) const override;
    std::string name() const override { return "log-barrier"; }
    bool threadSafe() const override { return true; }
};

const Backend& defaultBackend();

}  // namespace ddbt::sdp
