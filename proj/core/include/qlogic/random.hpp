#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qlogic/reals.hpp"

namespace qlogic {

struct CorrelatedTriple {
    Observable a;
    Observable b;
    StateVector psi;
};

/// Seeded generators for the property suites. Every draw is a deterministic
/// function of the seed and the call sequence.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {
    }

    std::mt19937_64 &engine() noexcept {
        return engine_;
    }

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive
    bool coin(double p = 0.5);
    Complex gaussian_complex();

    /// Haar-distributed unitary via QR of a complex Gaussian matrix.
    ComplexMatrix unitary(int d);
    /// Uniformly oriented projection of the given rank.
    Projection projection(int d, int rank);
    /// Projection of random rank in [0, d].
    Projection projection(int d);
    StateVector state(int d);
    /// Random unit vector in the range of p; p must be nonzero.
    StateVector state_in(const Projection &p);

    /// Random Hermitian U diag(λ) U†. With `degenerate`, eigenvalues are drawn from a
    /// small pool so that multiplicities ≥ 2 occur.
    ComplexMatrix hermitian(int d, bool degenerate = false);
    Observable observable(int d, bool degenerate = false);

    /// Random QuantumReal with 1 to `max_jumps` jumps and levels nested along a random basis.
    QuantumReal quantum_real(int d, int max_jumps);

    /// Y with spec(Y) above max spec(X), so X ≼ Y while X and Y need not commute.
    Observable observable_above(const Observable &x);
    /// Commuting pair, diagonal in one basis, equal on a random nonzero proper coordinate subspace.
    std::pair<Observable, Observable> partially_equal_observables(int d);
    std::pair<QuantumReal, QuantumReal> partially_equal_reals(int d);
    /// A and B agree on an A-invariant subspace S ∋ ψ and differ arbitrarily on S⊥.
    CorrelatedTriple correlated_triple(int d);

    /// Random QSet of rank ≤ max_rank whose weights come from `pool`.
    QSet qset(int d, int max_rank, std::span<const Projection> pool, int max_width = 3);

    /// Weight pools. The block pool commutes except on one two-dimensional block.
    std::vector<Projection> generic_pool(int d, int size);
    std::vector<Projection> commuting_pool(int d, int size);
    std::vector<Projection> block_pool(int d, int size);

   private:
    double quarter_level();

    std::mt19937_64 engine_;
};

}  // namespace qlogic
