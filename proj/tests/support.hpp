#pragma once

#include <cmath>

#include <qlogic/qlogic.hpp>

namespace qlogic::testing {

inline ComplexMatrix diag(std::initializer_list<double> values) {
    const int d = static_cast<int>(values.size());
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    int k = 0;
    for (double v : values) {
        m(k, k) = v;
        ++k;
    }
    return m;
}

inline Projection pdiag(std::initializer_list<double> values) {
    return Projection::from_matrix(diag(values));
}

inline ComplexVector vec(std::initializer_list<Complex> values) {
    ComplexVector v(static_cast<int>(values.size()));
    int k = 0;
    for (Complex c : values) {
        v(k++) = c;
    }
    return v;
}

/// |+⟩⟨+| in C².
inline Projection plus() {
    const double h = 1.0 / std::sqrt(2.0);
    return Projection::onto_vector(vec({h, h}));
}

/// |−⟩⟨−| in C².
inline Projection minus() {
    const double h = 1.0 / std::sqrt(2.0);
    return Projection::onto_vector(vec({h, -h}));
}

inline double dist(const Projection &a, const Projection &b) {
    return frobenius_distance(a.matrix(), b.matrix());
}

inline double dist(const ComplexMatrix &a, const ComplexMatrix &b) {
    return frobenius_distance(a, b);
}

/// Equality of two projection families as sets, up to subspace_equal.
inline bool same_family(const std::vector<Projection> &a, const std::vector<Projection> &b) {
    auto covered = [](const std::vector<Projection> &from, const std::vector<Projection> &into) {
        for (const Projection &p : from) {
            bool found = false;
            for (const Projection &q : into) {
                found = found || subspace_equal(p, q);
            }
            if (!found) {
                return false;
            }
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace qlogic::testing
