#pragma once

#include <array>
#include <vector>

#include "qlogic/reals.hpp"

namespace qlogic {

/// Outcome statistics of two successive projective measurements.
///
/// Index convention: the entry at (i, j) is for outcome x_i of the second-measured
/// observable and y_j of the first-measured one, so P^{X,Y} means "Y first, then X".
struct JointDistribution {
    std::vector<double> second_outcomes;  // x_i
    std::vector<double> first_outcomes;   // y_j
    std::vector<std::vector<double>> probabilities;  // [i][j]
    /// Outcomes closer than this are treated as equal when ordering them.
    double tie_threshold = 0.0;

    double total() const;
    /// Σ P(x, y) over x > y.
    double mass_second_exceeds() const;
    /// Σ P(x, y) over y > x.
    double mass_first_exceeds() const;
    /// Σ_i P(x_i, y_j) for each j.
    std::vector<double> first_marginal() const;
};

/// P(x, y) = ‖E^second({x}) E^first({y}) ψ‖².
JointDistribution successive_distribution(const Observable &first, const Observable &second, const StateVector &psi,
                                          const Tolerance &tol = {});

/// P^{X,Y}_ψ: Y measured first.
inline JointDistribution joint_distribution(const Observable &x, const Observable &y, const StateVector &psi,
                                            const Tolerance &tol = {}) {
    return successive_distribution(y, x, psi, tol);
}

struct OrderVerdict {
    ConditionalKind kind;
    bool member;                 // ψ ∈ R([[X̃ ≤ Ỹ]]_j)
    double membership_residual;  // ‖Pψ − ψ‖
    bool tail_zero;              // the measurement side of the equivalence
    double tail_mass;            // largest tail mass among the distributions consulted
    bool agrees() const {
        return member == tail_zero;
    }
};

struct OrderMeasurementReport {
    std::array<OrderVerdict, 3> verdicts;  // Sasaki, Contrapositive, Relevance
    JointDistribution xy;                  // P^{X,Y}
    JointDistribution yx;                  // P^{Y,X}
    bool all_agree() const;
};

/// For j = Sasaki compares ψ ∈ R([[X̃ ≤ Ỹ]]_S) with P^{X,Y}_ψ(x, y) = 0 whenever x > y.
/// The contrapositive conditional uses P^{Y,X}_ψ(y, x) instead; relevance requires both.
OrderMeasurementReport order_measurement_check(const Observable &x, const Observable &y, const StateVector &psi,
                                               const Tolerance &tol = {});

}  // namespace qlogic
