#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qlogic/errors.hpp"

namespace qlogic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every lattice and spectral computation.
///
/// `eps_rank` is the relative eigenvalue cutoff used when extracting null spaces;
/// `eps_compare` bounds the Frobenius distance at which two operators are treated as equal.
struct Tolerance {
    double eps_rank = 1e-9;
    double eps_compare = 1e-8;

    /// Throws ConfigError unless 0 < eps_rank < eps_compare < 1.
    void validate() const;
};

/// Absolute floor under the relative rank cutoff.
inline constexpr double kRankFloor = 1e-12;

/// A unit vector of C^d.
class StateVector {
   public:
    /// Throws NotNormalized if | |v| - 1 | > 1e-9.
    explicit StateVector(ComplexVector amplitudes);

    /// Rescales a nonzero vector to unit norm.
    static StateVector normalized(const ComplexVector &v);

    int dim() const noexcept {
        return static_cast<int>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }

   private:
    ComplexVector amplitudes_;
};

void require_finite(const ComplexMatrix &m);
void require_square(const ComplexMatrix &m);

/// Frobenius distance between two matrices of equal shape.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace qlogic
