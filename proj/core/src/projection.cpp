#include "qlogic/projection.hpp"

#include <cmath>
#include <string>

namespace qlogic {

Projection Projection::from_matrix(const ComplexMatrix &m, const Tolerance &tol) {
    require_square(m);
    require_finite(m);
    const double sa = (m - m.adjoint()).norm();
    if (sa > tol.eps_compare) {
        throw InvalidProjection("projection not self-adjoint: ‖P − P†‖_F = " + std::to_string(sa));
    }
    const double idem = (m * m - m).norm();
    if (idem > tol.eps_compare) {
        throw InvalidProjection("projection not idempotent: ‖P² − P‖_F = " + std::to_string(idem));
    }
    return from_trusted(m);
}

Projection Projection::from_trusted(ComplexMatrix m) {
    ComplexMatrix h = (m + m.adjoint()) * 0.5;
    return Projection(std::move(h));
}

Projection Projection::zero(int dim) {
    if (dim <= 0) {
        throw DimMismatch("projection dimension must be positive");
    }
    return Projection(ComplexMatrix::Zero(dim, dim));
}

Projection Projection::identity(int dim) {
    if (dim <= 0) {
        throw DimMismatch("projection dimension must be positive");
    }
    return Projection(ComplexMatrix::Identity(dim, dim));
}

Projection Projection::onto_vector(const ComplexVector &v) {
    const double n2 = v.squaredNorm();
    if (!(n2 > 0.0) || !v.allFinite()) {
        throw InvalidProjection("cannot project onto a zero or non-finite vector");
    }
    return from_trusted(v * v.adjoint() / n2);
}

int Projection::rank() const {
    return static_cast<int>(std::lround(matrix_.trace().real()));
}

bool Projection::is_zero(const Tolerance &tol) const {
    return matrix_.norm() <= tol.eps_compare;
}

bool Projection::is_identity(const Tolerance &tol) const {
    return (matrix_ - ComplexMatrix::Identity(dim(), dim())).norm() <= tol.eps_compare;
}

ComplexMatrix Projection::top_block(int d) const {
    if (d <= 0 || d > dim()) {
        throw DimMismatch("block size out of range");
    }
    return matrix_.topLeftCorner(d, d);
}

Projection Projection::embed(int extra) const {
    if (extra < 0) {
        throw DimMismatch("negative embedding size");
    }
    ComplexMatrix big = ComplexMatrix::Zero(dim() + extra, dim() + extra);
    big.topLeftCorner(dim(), dim()) = matrix_;
    return Projection(std::move(big));
}

void require_same_dim(const Projection &p, const Projection &q) {
    if (p.dim() != q.dim()) {
        throw DimMismatch("projection dimensions differ: " + std::to_string(p.dim()) + " vs " +
                          std::to_string(q.dim()));
    }
}

}  // namespace qlogic
