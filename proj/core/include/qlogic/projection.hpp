#pragma once

#include "qlogic/matrix.hpp"

namespace qlogic {

/// An orthogonal projection on C^d: an element of the projection lattice Q(C^d).
///
/// Instances are immutable and always valid: `from_matrix` checks idempotence and
/// self-adjointness, and library operations only produce validated results.
class Projection {
   public:
    /// Validates ‖P² − P‖_F ≤ eps_compare and ‖P − P†‖_F ≤ eps_compare, then symmetrizes.
    /// Together these place every eigenvalue within eps_compare of {0, 1}.
    static Projection from_matrix(const ComplexMatrix &m, const Tolerance &tol = {});

    /// Internal constructor for matrices that are projections by construction.
    static Projection from_trusted(ComplexMatrix m);

    static Projection zero(int dim);
    static Projection identity(int dim);

    /// Rank-one projection |v⟩⟨v| / ⟨v|v⟩.
    static Projection onto_vector(const ComplexVector &v);

    int dim() const noexcept {
        return static_cast<int>(matrix_.rows());
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    /// Trace, rounded to the nearest integer.
    int rank() const;

    bool is_zero(const Tolerance &tol = {}) const;
    bool is_identity(const Tolerance &tol = {}) const;

    /// Top-left `d`×`d` block; used when comparing against a block embedding.
    ComplexMatrix top_block(int d) const;

    /// P ⊕ 0 on C^(dim + extra).
    Projection embed(int extra) const;

   private:
    explicit Projection(ComplexMatrix m) : matrix_(std::move(m)) {
    }
    ComplexMatrix matrix_;
};

void require_same_dim(const Projection &p, const Projection &q);

}  // namespace qlogic
