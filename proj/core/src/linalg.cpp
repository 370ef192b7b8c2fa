#include "qlogic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace qlogic {

void Tolerance::validate() const {
    if (!(eps_rank > 0.0 && eps_rank < eps_compare && eps_compare < 1.0)) {
        throw ConfigError("tolerance requires 0 < eps_rank < eps_compare < 1 (got eps_rank=" +
                          std::to_string(eps_rank) + ", eps_compare=" + std::to_string(eps_compare) +
                          ")");
    }
}

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw NotNormalized("state vector must have positive dimension");
    }
    if (!amplitudes_.allFinite()) {
        throw NonFinite("state vector has non-finite amplitudes");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-9) {
        throw NotNormalized("state vector norm is " + std::to_string(amplitudes_.norm()));
    }
}

StateVector StateVector::normalized(const ComplexVector &v) {
    double n = v.norm();
    if (!(n > 0.0)) {
        throw NotNormalized("cannot normalize a zero vector");
    }
    return StateVector(v / n);
}

void require_finite(const ComplexMatrix &m) {
    if (!m.allFinite()) {
        throw NonFinite("matrix has non-finite entries");
    }
}

void require_square(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw NonSquare("expected a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimMismatch("matrix shapes differ");
    }
    return (a - b).norm();
}

double hermitian_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).norm();
}

namespace {

// One complex Jacobi rotation J acting on columns (p, q), where the rotation
// first rotates the phase of a(p,q) to the real axis and then applies the
// classical real rotation that annihilates it.
struct Rotation {
    double c;
    double s;
    Complex phase;  // a(p,q) / |a(p,q)|
};

void rotate_columns(ComplexMatrix &x, Eigen::Index p, Eigen::Index q, const Rotation &r) {
    const Complex e = std::conj(r.phase);
    for (Eigen::Index k = 0; k < x.rows(); ++k) {
        const Complex xp = x(k, p);
        const Complex xq = x(k, q);
        x(k, p) = r.c * xp - r.s * e * xq;
        x(k, q) = r.s * xp + r.c * e * xq;
    }
}

void rotate_rows(ComplexMatrix &x, Eigen::Index p, Eigen::Index q, const Rotation &r) {
    const Complex e = r.phase;
    for (Eigen::Index k = 0; k < x.cols(); ++k) {
        const Complex xp = x(p, k);
        const Complex xq = x(q, k);
        x(p, k) = r.c * xp - r.s * e * xq;
        x(q, k) = r.s * xp + r.c * e * xq;
    }
}

double off_diagonal_squared(const ComplexMatrix &a) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < a.cols(); ++q) {
        for (Eigen::Index p = 0; p < q; ++p) {
            off += std::norm(a(p, q));
        }
    }
    return off;
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &m, const Tolerance &tol) {
    require_square(m);
    require_finite(m);
    const double scale = std::max(1.0, m.norm());
    const double defect = hermitian_defect(m);
    if (defect > tol.eps_compare * scale) {
        throw NotHermitian("matrix is not Hermitian: ‖M − M†‖_F = " + std::to_string(defect));
    }

    const Eigen::Index n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * 0.5;
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    const double total = a.squaredNorm();
    const double stop = total * 1e-32;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_squared(a) <= stop) {
            break;
        }
        for (Eigen::Index q = 1; q < n; ++q) {
            for (Eigen::Index p = 0; p < q; ++p) {
                const Complex apq = a(p, q);
                const double magnitude = std::abs(apq);
                if (magnitude == 0.0 || magnitude * magnitude <= stop / static_cast<double>(n * n)) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * magnitude);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const Rotation r{c, t * c, apq / magnitude};

                rotate_columns(a, p, q, r);
                rotate_rows(a, p, q, r);
                rotate_columns(v, p, q, r);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Projection nullspace_projection(const ComplexMatrix &m, const Tolerance &tol) {
    const EigenDecomposition eig = hermitian_eig(m, tol);
    const Eigen::Index n = m.rows();
    const double lambda_max = eig.values.cwiseAbs().maxCoeff();
    if (lambda_max <= kRankFloor) {
        return Projection::identity(static_cast<int>(n));
    }
    const double cutoff = std::max(tol.eps_rank * lambda_max, kRankFloor);
    Eigen::Index kept = 0;
    while (kept < n && eig.values(kept) <= cutoff) {
        ++kept;
    }
    const auto basis = eig.vectors.leftCols(kept);
    return Projection::from_trusted(basis * basis.adjoint());
}

Projection range_projection(const ComplexMatrix &columns, const Tolerance &tol) {
    require_finite(columns);
    const Eigen::Index n = columns.rows();
    if (columns.cols() == 0 || columns.norm() == 0.0) {
        return Projection::zero(static_cast<int>(n));
    }
    const Projection null = nullspace_projection(columns * columns.adjoint(), tol);
    return Projection::from_trusted(ComplexMatrix::Identity(n, n) - null.matrix());
}

bool subspace_equal(const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    return (p.matrix() - q.matrix()).norm() <= tol.eps_compare;
}

bool in_range(const Projection &p, const StateVector &psi, const Tolerance &tol) {
    if (p.dim() != psi.dim()) {
        throw DimMismatch("state dimension " + std::to_string(psi.dim()) + " vs projection dimension " +
                          std::to_string(p.dim()));
    }
    return (p.matrix() * psi.amplitudes() - psi.amplitudes()).norm() <= tol.eps_compare;
}

}  // namespace qlogic
