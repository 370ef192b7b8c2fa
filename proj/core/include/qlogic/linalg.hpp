#pragma once

#include "qlogic/matrix.hpp"
#include "qlogic/projection.hpp"

namespace qlogic {

struct EigenDecomposition {
    RealVector values;     // ascending
    ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

/// ‖M − M†‖_F, the deviation from self-adjointness.
double hermitian_defect(const ComplexMatrix &m);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is checked against ‖M − M†‖_F ≤ eps_compare · max(1, ‖M‖_F) and then
/// symmetrized. Eigenvalues come back ascending with matching eigenvector columns.
EigenDecomposition hermitian_eig(const ComplexMatrix &m, const Tolerance &tol = {});

/// Orthogonal projection onto the eigenspace of a positive semidefinite M for
/// eigenvalues at most max(eps_rank · λ_max, 1e-12). Returns the identity when M ≈ 0.
Projection nullspace_projection(const ComplexMatrix &m, const Tolerance &tol = {});

/// Orthogonal projection onto the column span of `columns`.
Projection range_projection(const ComplexMatrix &columns, const Tolerance &tol = {});

/// ‖P − Q‖_F ≤ eps_compare. Throws DimMismatch on differing ambient dimension.
bool subspace_equal(const Projection &p, const Projection &q, const Tolerance &tol = {});

/// ψ ∈ R(P), decided by ‖Pψ − ψ‖ ≤ eps_compare.
bool in_range(const Projection &p, const StateVector &psi, const Tolerance &tol = {});

}  // namespace qlogic
