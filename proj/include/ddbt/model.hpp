#pragma once

#include "ddbt/linalg.hpp"

namespace ddbt {

struct Dims {
    Index n = 0;  // states
    Index m = 0;  // inputs
    Index p = 0;  // outputs
};

// x(k+1) = A x(k) + B u(k),  y(k) = C x(k) + D u(k).
struct StateSpaceModel {
    Matrix A, B, C, D;

    Index n() const { return A.rows(); }
    Index m() const { return B.cols(); }
    Index p() const { return C.rows(); }
    Dims dims() const { return {n(), m(), p()}; }
    // Stacked [A B; C D].
    Matrix stacked() const;
    static StateSpaceModel fromStacked(const Matrix& Z, const Dims& d);

    // Throws DimensionMismatch / Error on inconsistent shapes or non-finite entries.
    void validate() const;
    // Evaluates G(z) = C (zI − A)⁻¹ B + D at z = e^{iω} and returns its largest singular value.
    double gainAt(double omega) const;
};

}  // namespace ddbt
