#include "ddbt/model.hpp"

#include <complex>

#include "ddbt/errors.hpp"

namespace ddbt {

void StateSpaceModel::validate() const {
    const Index nn = A.rows();
    if (A.cols() != nn) throw DimensionMismatch("model: A is not square");
    if (B.rows() != nn) throw DimensionMismatch("model: B rows differ from A");
    if (C.cols() != nn) throw DimensionMismatch("model: C columns differ from A");
    if (D.rows() != C.rows() || D.cols() != B.cols()) throw DimensionMismatch("model: D shape mismatch");
    if (!A.allFinite() || !B.allFinite() || !C.allFinite() || !D.allFinite())
        throw Error("model: non-finite entries");
}

Matrix StateSpaceModel::stacked() const {
    Matrix Z(n() + p(), n() + m());
    Z << A, B, C, D;
    return Z;
}

StateSpaceModel StateSpaceModel::fromStacked(const Matrix& Z, const Dims& d) {
    if (Z.rows() != d.n + d.p || Z.cols() != d.n + d.m)
        throw DimensionMismatch("fromStacked: matrix does not match the dimensions");
    return {Z.topLeftCorner(d.n, d.n), Z.topRightCorner(d.n, d.m), Z.bottomLeftCorner(d.p, d.n),
            Z.bottomRightCorner(d.p, d.m)};
}

double StateSpaceModel::gainAt(double omega) const {
    using Complex = std::complex<double>;
    using CMatrix = Eigen::MatrixXcd;
    const Complex z = std::polar(1.0, omega);
    CMatrix G = D.cast<Complex>();
    if (n() > 0) {
        const CMatrix M = z * CMatrix::Identity(n(), n()) - A.cast<Complex>();
        G += C.cast<Complex>() * M.partialPivLu().solve(B.cast<Complex>());
    }
    if (G.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(G);
    return svd.singularValues()(0);
}

}  // namespace ddbt
