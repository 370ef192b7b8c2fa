#include <gtest/gtest.h>

#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

const OrderVerdict &verdict(const OrderMeasurementReport &r, ConditionalKind j) {
    for (const OrderVerdict &v : r.verdicts) {
        if (v.kind == j) {
            return v;
        }
    }
    throw std::logic_error("missing verdict");
}

}  // namespace

TEST(Successive, SameDiagonalObservable) {
    const Observable x(diag({2, 5, 7}));
    const JointDistribution p = successive_distribution(x, x, StateVector(vec({1, 0, 0})));
    EXPECT_NEAR(p.probabilities[0][0], 1.0, 1e-15);
    EXPECT_NEAR(p.total(), 1.0, 1e-15);
    EXPECT_EQ(p.second_outcomes[0], 2.0);
}

TEST(Successive, QuarterPattern) {
    // Y = |+⟩⟨+| measured first on |0⟩, then X = diag(0,1).
    const JointDistribution p =
        joint_distribution(Observable(diag({0, 1})), Observable(plus().matrix()), StateVector(vec({1, 0})));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_NEAR(p.probabilities[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 0.25, 1e-14);
        }
    }
}

TEST(Successive, NormalizedWithBornMarginal) {
    RandomSource rng(91);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 5;
        const Observable first = rng.observable(d, trial % 2 == 0);
        const Observable second = rng.observable(d, trial % 3 == 0);
        const StateVector psi = rng.state(d);
        const JointDistribution p = successive_distribution(first, second, psi);
        ASSERT_NEAR(p.total(), 1.0, 1e-9);
        const std::vector<double> marginal = p.first_marginal();
        for (std::size_t j = 0; j < marginal.size(); ++j) {
            const double born = (first.eigenprojections()[j].matrix() * psi.amplitudes()).squaredNorm();
            ASSERT_NEAR(marginal[j], born, 1e-12);
        }
        for (const auto &row : p.probabilities) {
            for (double v : row) {
                ASSERT_GE(v, 0.0);
            }
        }
    }
}

TEST(Successive, CommutingPairsAreSymmetric) {
    RandomSource rng(92);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 4;
        const Observable x = rng.observable(d, true);
        const Observable y = borel_apply([](double t) { return std::cos(t); }, x);
        const StateVector psi = rng.state(d);
        const JointDistribution xy = joint_distribution(x, y, psi);
        const JointDistribution yx = joint_distribution(y, x, psi);
        for (std::size_t i = 0; i < xy.second_outcomes.size(); ++i) {
            for (std::size_t j = 0; j < xy.first_outcomes.size(); ++j) {
                ASSERT_NEAR(xy.probabilities[i][j], yx.probabilities[j][i], 1e-12);
            }
        }
        const OrderMeasurementReport r = order_measurement_check(x, y, psi);
        ASSERT_EQ(r.verdicts[0].member, r.verdicts[1].member);
        ASSERT_EQ(r.verdicts[1].member, r.verdicts[2].member);
    }
}

TEST(Successive, DimensionMismatch) {
    EXPECT_THROW(successive_distribution(Observable(diag({0, 1})), Observable(diag({0, 1, 2})),
                                         StateVector(vec({1, 0}))),
                 DimMismatch);
}

TEST(OrderMeasurement, OrderedPairIsAlwaysMember) {
    RandomSource rng(93);
    const Observable x(diag({0, 1, 2}));
    const Observable y(diag({1, 1, 2}));
    const OrderMeasurementReport r = order_measurement_check(x, y, rng.state(3));
    for (const OrderVerdict &v : r.verdicts) {
        EXPECT_TRUE(v.member);
        EXPECT_TRUE(v.tail_zero);
        EXPECT_NEAR(v.tail_mass, 0.0, 1e-15);
    }
}

TEST(OrderMeasurement, WorkedExample) {
    const Observable x(plus().matrix());
    const Observable y(diag({0, 1}));
    const OrderMeasurementReport one = order_measurement_check(x, y, StateVector(vec({0, 1})));
    const OrderVerdict &s1 = verdict(one, ConditionalKind::Sasaki);
    EXPECT_TRUE(s1.member);
    EXPECT_TRUE(s1.tail_zero);
    EXPECT_NEAR(one.xy.mass_second_exceeds(), 0.0, 1e-15);

    const OrderMeasurementReport zero = order_measurement_check(x, y, StateVector(vec({1, 0})));
    const OrderVerdict &s0 = verdict(zero, ConditionalKind::Sasaki);
    EXPECT_FALSE(s0.member);
    EXPECT_FALSE(s0.tail_zero);
    EXPECT_GT(zero.xy.mass_second_exceeds(), 0.1);
    EXPECT_TRUE(one.all_agree());
    EXPECT_TRUE(zero.all_agree());
}

TEST(OrderMeasurement, BiconditionalsOnRandomTriples) {
    RandomSource rng(94);
    int members = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 2 + trial % 5;
        const Observable x = rng.observable(d, trial % 2 == 0);
        const Observable y = rng.observable(d, trial % 3 == 0);
        StateVector psi = rng.state(d);
        const ConditionalKind j = kAllConditionals[trial % 3];
        const Projection value = order_truth_value(x, y, j);
        if (trial % 2 == 1 && value.rank() > 0) {
            psi = rng.state_in(value);
        }
        const OrderMeasurementReport r = order_measurement_check(x, y, psi);
        ASSERT_TRUE(r.all_agree()) << "trial " << trial;
        ASSERT_NEAR(r.xy.total(), 1.0, 1e-9);
        ASSERT_NEAR(r.yx.total(), 1.0, 1e-9);
        members += verdict(r, j).member ? 1 : 0;
    }
    EXPECT_GT(members, 30);
}
