#include "qlogic/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/QR>

namespace qlogic {

double RandomSource::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int RandomSource::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool RandomSource::coin(double p) {
    return std::bernoulli_distribution(p)(engine_);
}

Complex RandomSource::gaussian_complex() {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(engine_);
    const double im = n(engine_);
    return {re, im};
}

ComplexMatrix RandomSource::unitary(int d) {
    ComplexMatrix g(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            g(r, c) = gaussian_complex();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return q;
}

Projection RandomSource::projection(int d, int rank) {
    if (rank <= 0) {
        return Projection::zero(d);
    }
    const ComplexMatrix cols = unitary(d).leftCols(rank);
    return Projection::from_trusted(cols * cols.adjoint());
}

Projection RandomSource::projection(int d) {
    return projection(d, uniform_int(0, d));
}

StateVector RandomSource::state(int d) {
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) {
        v(k) = gaussian_complex();
    }
    return StateVector::normalized(v);
}

StateVector RandomSource::state_in(const Projection &p) {
    if (p.rank() == 0) {
        throw PreconditionViolated("cannot draw a state from the zero subspace");
    }
    for (;;) {
        const ComplexVector v = p.matrix() * state(p.dim()).amplitudes();
        if (v.norm() > 1e-6) {
            return StateVector::normalized(v);
        }
    }
}

ComplexMatrix RandomSource::hermitian(int d, bool degenerate) {
    RealVector values(d);
    if (degenerate) {
        const int pool = std::max(1, d / 2);
        std::vector<double> levels(pool);
        for (double &l : levels) {
            l = std::round(uniform(-3.0, 3.0) * 4.0) / 4.0;
        }
        for (int k = 0; k < d; ++k) {
            values(k) = levels[static_cast<std::size_t>(uniform_int(0, pool - 1))];
        }
    } else {
        for (int k = 0; k < d; ++k) {
            values(k) = uniform(-3.0, 3.0);
        }
    }
    const ComplexMatrix u = unitary(d);
    const ComplexMatrix h = u * values.cast<Complex>().asDiagonal() * u.adjoint();
    return (h + h.adjoint()) / 2.0;
}

Observable RandomSource::observable(int d, bool degenerate) {
    return Observable(hermitian(d, degenerate));
}

QuantumReal RandomSource::quantum_real(int d, int max_jumps) {
    const int n = uniform_int(1, std::max(1, std::min(max_jumps, d)));
    std::vector<int> cuts(static_cast<std::size_t>(d - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), engine_);
    cuts.resize(static_cast<std::size_t>(n - 1));
    cuts.push_back(d);
    std::sort(cuts.begin(), cuts.end());

    std::vector<double> jumps;
    while (static_cast<int>(jumps.size()) < n) {
        const double r = std::round(uniform(-4.0, 4.0) * 8.0) / 8.0;
        if (std::find(jumps.begin(), jumps.end(), r) == jumps.end()) {
            jumps.push_back(r);
        }
    }
    std::sort(jumps.begin(), jumps.end());

    const ComplexMatrix u = unitary(d);
    std::vector<Projection> levels;
    for (int rank : cuts) {
        const ComplexMatrix cols = u.leftCols(rank);
        levels.push_back(rank == d ? Projection::identity(d) : Projection::from_trusted(cols * cols.adjoint()));
    }
    return QuantumReal(std::move(jumps), std::move(levels));
}

double RandomSource::quarter_level() {
    return std::round(uniform(-3.0, 3.0) * 4.0) / 4.0;
}

Observable RandomSource::observable_above(const Observable &x) {
    const int d = x.dim();
    const ComplexMatrix h = hermitian(d);
    const double lowest = Observable(h).spectrum().front();
    const double shift = x.spectrum().back() - lowest + uniform(0.0, 1.0);
    return Observable(h + shift * ComplexMatrix::Identity(d, d));
}

std::pair<Observable, Observable> RandomSource::partially_equal_observables(int d) {
    if (d < 2) {
        throw PreconditionViolated("partially equal observables need d >= 2");
    }
    const ComplexMatrix basis = unitary(d);
    const int k = uniform_int(1, d - 1);
    RealVector a(d);
    RealVector b(d);
    for (int i = 0; i < d; ++i) {
        a(i) = quarter_level();
        b(i) = i < k ? a(i) : quarter_level();
    }
    return {Observable(basis * a.cast<Complex>().asDiagonal() * basis.adjoint()),
            Observable(basis * b.cast<Complex>().asDiagonal() * basis.adjoint())};
}

std::pair<QuantumReal, QuantumReal> RandomSource::partially_equal_reals(int d) {
    const auto [a, b] = partially_equal_observables(d);
    return {observable_to_real(a), observable_to_real(b)};
}

CorrelatedTriple RandomSource::correlated_triple(int d) {
    if (d < 2) {
        throw PreconditionViolated("correlated triple needs d >= 2");
    }
    const ComplexMatrix u = unitary(d);
    const int k = uniform_int(1, d - 1);
    RealVector a(d);
    for (int i = 0; i < d; ++i) {
        a(i) = quarter_level();
    }
    const ComplexMatrix s = u.leftCols(k);
    const ComplexMatrix perp = u.rightCols(d - k);
    const ComplexMatrix rest = hermitian(d - k, coin());
    ComplexMatrix bm = s * a.head(k).cast<Complex>().asDiagonal() * s.adjoint() + perp * rest * perp.adjoint();
    bm = (bm + bm.adjoint()) / 2.0;
    const StateVector psi = state_in(Projection::from_trusted(s * s.adjoint()));
    return {Observable(u * a.cast<Complex>().asDiagonal() * u.adjoint()), Observable(bm), psi};
}

QSet RandomSource::qset(int d, int max_rank, std::span<const Projection> pool, int max_width) {
    if (max_rank <= 0 || pool.empty()) {
        return QSet::empty(d);
    }
    const int width = uniform_int(0, max_width);
    std::vector<QEntry> entries;
    for (int k = 0; k < width; ++k) {
        QSet child = qset(d, uniform_int(0, max_rank - 1), pool, max_width);
        const Projection &w = pool[static_cast<std::size_t>(uniform_int(0, static_cast<int>(pool.size()) - 1))];
        entries.push_back({std::move(child), w});
    }
    return QSet::make(d, std::move(entries));
}

std::vector<Projection> RandomSource::generic_pool(int d, int size) {
    std::vector<Projection> out;
    for (int k = 0; k < size; ++k) {
        out.push_back(projection(d, uniform_int(1, d)));
    }
    return out;
}

std::vector<Projection> RandomSource::commuting_pool(int d, int size) {
    const ComplexMatrix u = unitary(d);
    std::vector<Projection> out;
    for (int k = 0; k < size; ++k) {
        RealVector diag(d);
        for (int i = 0; i < d; ++i) {
            diag(i) = coin() ? 1.0 : 0.0;
        }
        out.push_back(Projection::from_trusted(u * diag.cast<Complex>().asDiagonal() * u.adjoint()));
    }
    return out;
}

std::vector<Projection> RandomSource::block_pool(int d, int size) {
    if (d < 2) {
        return commuting_pool(d, size);
    }
    const ComplexMatrix u = unitary(d);
    std::vector<Projection> out;
    for (int k = 0; k < size; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        m.topLeftCorner(2, 2) = projection(2).matrix();
        for (int i = 2; i < d; ++i) {
            m(i, i) = coin() ? 1.0 : 0.0;
        }
        out.push_back(Projection::from_trusted(u * m * u.adjoint()));
    }
    return out;
}

}  // namespace qlogic
