#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

TEST(Tolerance, DefaultsAreValid) {
    EXPECT_NO_THROW(Tolerance{}.validate());
}

TEST(Tolerance, RejectsInvertedOrder) {
    EXPECT_THROW((Tolerance{1e-6, 1e-9}.validate()), ConfigError);
    EXPECT_THROW((Tolerance{0.0, 1e-8}.validate()), ConfigError);
    EXPECT_THROW((Tolerance{1e-9, 1.5}.validate()), ConfigError);
}

TEST(StateVector, RequiresUnitNorm) {
    EXPECT_NO_THROW(StateVector(vec({1.0, 0.0})));
    EXPECT_THROW(StateVector(vec({1.0, 1.0})), NotNormalized);
    const StateVector s = StateVector::normalized(vec({3.0, 4.0}));
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
}

TEST(HermitianEig, DiagonalInput) {
    const EigenDecomposition e = hermitian_eig(diag({3, 1, 2}));
    EXPECT_NEAR(e.values(0), 1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 2.0, 1e-14);
    EXPECT_NEAR(e.values(2), 3.0, 1e-14);
    EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(e.vectors(2, 1)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(e.vectors(0, 2)), 1.0, 1e-14);
}

TEST(HermitianEig, Identity) {
    const EigenDecomposition e = hermitian_eig(ComplexMatrix::Identity(4, 4));
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.values(k), 1.0, 1e-14);
    }
    EXPECT_LE(dist(e.vectors.adjoint() * e.vectors, ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(HermitianEig, PauliX) {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    const EigenDecomposition e = hermitian_eig(x);
    EXPECT_NEAR(e.values(0), -1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 1.0, 1e-14);
    for (int k = 0; k < 2; ++k) {
        const ComplexVector v = e.vectors.col(k);
        EXPECT_LE((x * v - e.values(k) * v).norm(), 1e-13);
    }
    // (|0⟩ − |1⟩)/√2 up to phase.
    EXPECT_NEAR(std::abs(e.vectors(0, 0) + e.vectors(1, 0)), 0.0, 1e-13);
}

TEST(HermitianEig, RejectsNonHermitianAndNonSquare) {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    EXPECT_THROW(hermitian_eig(m), NotHermitian);
    EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), NonSquare);
    ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(hermitian_eig(bad), NonFinite);
}

TEST(HermitianEig, MatchesEigenOracleOnRandomMatrices) {
    RandomSource rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 1 + trial % 8;
        const ComplexMatrix m = rng.hermitian(d, trial % 3 == 0);
        const EigenDecomposition e = hermitian_eig(m);
        const ComplexMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        ASSERT_LE(dist(m, rebuilt), 1e-8) << "trial " << trial;
        ASSERT_LE(dist(e.vectors.adjoint() * e.vectors, ComplexMatrix::Identity(d, d)), 1e-8);

        Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(m);
        ASSERT_LE((oracle.eigenvalues() - e.values).norm(), 1e-9) << "trial " << trial;
    }
}

TEST(Nullspace, DiagonalCase) {
    const Projection n = nullspace_projection(diag({0, 0, 5}));
    EXPECT_LE(dist(n.matrix(), diag({1, 1, 0})), 1e-12);
}

TEST(Nullspace, ZeroMatrixGivesIdentity) {
    EXPECT_TRUE(nullspace_projection(ComplexMatrix::Zero(3, 3)).is_identity());
}

TEST(Nullspace, MeetOfEqualAxes) {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix p = diag({1, 0});
    const Projection n = nullspace_projection((i2 - p) + (i2 - p));
    EXPECT_LE(dist(n.matrix(), p), 1e-12);
}

TEST(Nullspace, OutputIsProjectionAnnihilatedByInput) {
    RandomSource rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 2 + trial % 6;
        const ComplexMatrix cols = rng.unitary(d).leftCols(1 + trial % (d - 1));
        const ComplexMatrix m = cols * cols.adjoint() * rng.uniform(0.5, 3.0);
        const Projection r = nullspace_projection(m);
        const ComplexMatrix &rm = r.matrix();
        ASSERT_LE(dist(rm * rm, rm), 1e-8);
        ASSERT_LE(dist(rm.adjoint(), rm), 1e-8);
        ASSERT_LE((m * rm).norm(), 1e-8 * 3.0);
        ASSERT_EQ(r.rank(), d - cols.cols());
    }
}

TEST(RangeProjection, SpanOfColumns) {
    ComplexMatrix cols(3, 2);
    cols << 1.0, 1.0, 0.0, 1.0, 0.0, 0.0;
    const Projection r = range_projection(cols);
    EXPECT_LE(dist(r.matrix(), diag({1, 1, 0})), 1e-12);
}

TEST(SubspaceEqual, Basics) {
    const Projection p = pdiag({1, 0});
    EXPECT_TRUE(subspace_equal(p, p));
    EXPECT_FALSE(subspace_equal(p, pdiag({0, 1})));
    EXPECT_THROW(subspace_equal(p, pdiag({1, 0, 0})), DimMismatch);
}

TEST(SubspaceEqual, MeetComputedTwoWays) {
    RandomSource rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 3 + trial % 3;
        // Q = P ∨ R shares R(P), so P ∧ Q = P is nontrivial.
        const Projection p = rng.projection(d, 1);
        const Projection q = join(p, rng.projection(d, 1));
        const Projection exact = meet(p, q);
        const Projection iterated = Projection::from_trusted(meet_by_iteration(p, q));
        ASSERT_TRUE(subspace_equal(exact, iterated));
    }
}

TEST(SubspaceEqual, ReflexiveAndSymmetric) {
    RandomSource rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Projection p = rng.projection(4);
        const Projection q = Projection::from_trusted(p.matrix() + ComplexMatrix::Constant(4, 4, 1e-10));
        ASSERT_TRUE(subspace_equal(p, p));
        ASSERT_EQ(subspace_equal(p, q), subspace_equal(q, p));
    }
}

TEST(InRange, MembershipByResidual) {
    const Projection p = pdiag({1, 0});
    EXPECT_TRUE(in_range(p, StateVector(vec({1.0, 0.0}))));
    EXPECT_FALSE(in_range(p, StateVector::normalized(vec({1.0, 1.0}))));
}

TEST(ProjectionValidation, RejectsNonIdempotent) {
    EXPECT_THROW(Projection::from_matrix(diag({0.5, 0})), InvalidProjection);
    ComplexMatrix m(2, 2);
    m << 1.0, 1.0, 0.0, 0.0;
    EXPECT_THROW(Projection::from_matrix(m), InvalidProjection);
    EXPECT_NO_THROW(Projection::from_matrix(plus().matrix()));
}

TEST(ProjectionValidation, EmbedAndTopBlock) {
    const Projection p = plus();
    const Projection e = p.embed(2);
    EXPECT_EQ(e.dim(), 4);
    EXPECT_EQ(e.rank(), 1);
    EXPECT_LE(dist(e.top_block(2), p.matrix()), 1e-15);
}
