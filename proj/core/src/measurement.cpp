#include "qlogic/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace qlogic {

namespace {

constexpr double kClampFloor = -1e-12;

double clamp_probability(double p) {
    if (p < kClampFloor) {
        throw PreconditionViolated("negative outcome probability " + std::to_string(p));
    }
    return std::max(p, 0.0);
}

double tie_threshold(const Observable &a, const Observable &b, const Tolerance &tol) {
    double scale = 1.0;
    for (const auto *spec : {&a.spectrum(), &b.spectrum()}) {
        for (double v : *spec) {
            scale = std::max(scale, std::abs(v));
        }
    }
    return tol.eps_compare * scale;
}

}  // namespace

double JointDistribution::total() const {
    double sum = 0.0;
    for (const auto &row : probabilities) {
        for (double p : row) {
            sum += p;
        }
    }
    return sum;
}

double JointDistribution::mass_second_exceeds() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < second_outcomes.size(); ++i) {
        for (std::size_t j = 0; j < first_outcomes.size(); ++j) {
            if (second_outcomes[i] - first_outcomes[j] > tie_threshold) {
                sum += probabilities[i][j];
            }
        }
    }
    return sum;
}

double JointDistribution::mass_first_exceeds() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < second_outcomes.size(); ++i) {
        for (std::size_t j = 0; j < first_outcomes.size(); ++j) {
            if (first_outcomes[j] - second_outcomes[i] > tie_threshold) {
                sum += probabilities[i][j];
            }
        }
    }
    return sum;
}

std::vector<double> JointDistribution::first_marginal() const {
    std::vector<double> out(first_outcomes.size(), 0.0);
    for (std::size_t i = 0; i < second_outcomes.size(); ++i) {
        for (std::size_t j = 0; j < first_outcomes.size(); ++j) {
            out[j] += probabilities[i][j];
        }
    }
    return out;
}

JointDistribution successive_distribution(const Observable &first, const Observable &second, const StateVector &psi,
                                          const Tolerance &tol) {
    if (first.dim() != second.dim() || first.dim() != psi.dim()) {
        throw DimMismatch("successive_distribution operands differ in dimension");
    }
    JointDistribution out;
    out.second_outcomes = second.spectrum();
    out.first_outcomes = first.spectrum();
    out.tie_threshold = tie_threshold(first, second, tol);
    out.probabilities.assign(out.second_outcomes.size(), std::vector<double>(out.first_outcomes.size(), 0.0));

    for (std::size_t j = 0; j < out.first_outcomes.size(); ++j) {
        const ComplexVector after_first = first.eigenprojections()[j].matrix() * psi.amplitudes();
        for (std::size_t i = 0; i < out.second_outcomes.size(); ++i) {
            const ComplexVector after_second = second.eigenprojections()[i].matrix() * after_first;
            out.probabilities[i][j] = clamp_probability(after_second.squaredNorm());
        }
    }
    return out;
}

bool OrderMeasurementReport::all_agree() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const OrderVerdict &v) { return v.agrees(); });
}

OrderMeasurementReport order_measurement_check(const Observable &x, const Observable &y, const StateVector &psi,
                                               const Tolerance &tol) {
    OrderMeasurementReport report;
    report.xy = successive_distribution(y, x, psi, tol);
    report.yx = successive_distribution(x, y, psi, tol);

    // P^{X,Y}(x, y) with x > y, and P^{Y,X}(y, x) with x > y.
    const double tail_xy = report.xy.mass_second_exceeds();
    const double tail_yx = report.yx.mass_first_exceeds();

    for (std::size_t k = 0; k < std::size(kAllConditionals); ++k) {
        const ConditionalKind kind = kAllConditionals[k];
        const Projection value = order_truth_value(x, y, kind, tol);
        const double residual = (value.matrix() * psi.amplitudes() - psi.amplitudes()).norm();
        double tail = 0.0;
        switch (kind) {
            case ConditionalKind::Sasaki:
                tail = tail_xy;
                break;
            case ConditionalKind::Contrapositive:
                tail = tail_yx;
                break;
            case ConditionalKind::Relevance:
                tail = std::max(tail_xy, tail_yx);
                break;
        }
        report.verdicts[k] = OrderVerdict{kind, residual <= tol.eps_compare, residual,
                                          std::sqrt(tail) <= tol.eps_compare, tail};
    }
    return report;
}

}  // namespace qlogic
