#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/universe.hpp"

namespace qlogic {

/// A Hermitian operator together with its finite spectral resolution.
///
/// Eigenvalues closer than eps_compare · max(1, max|λ|) are merged into one
/// spectral atom whose value is the cluster mean.
class Observable {
   public:
    explicit Observable(const ComplexMatrix &m, const Tolerance &tol = {});

    /// Builds Σ x_k E_k from (value, projection) atoms. Atoms with equal values are
    /// merged; the projections must be pairwise orthogonal and sum to I.
    static Observable from_atoms(std::vector<std::pair<double, Projection>> atoms, const Tolerance &tol = {});
    static Observable scalar(double r, int dim);

    int dim() const noexcept {
        return static_cast<int>(matrix_.rows());
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    /// Ascending distinct eigenvalues x_1 < ... < x_n.
    const std::vector<double> &spectrum() const noexcept {
        return spectrum_;
    }
    /// E^X({x_k}), aligned with `spectrum()`.
    const std::vector<Projection> &eigenprojections() const noexcept {
        return eigenprojections_;
    }

    /// E^X(λ) = E^X((−∞, λ]).
    Projection spectral_projection(double lambda) const;
    /// E^X([lo, hi]).
    Projection atom_projection(double lo, double hi) const;
    /// E^X((a, b]); b may be +infinity.
    Projection interval_projection(double a, double b) const;

   private:
    Observable() = default;
    ComplexMatrix matrix_;
    std::vector<double> spectrum_;
    std::vector<Projection> eigenprojections_;
};

/// A quantum real in finite dimension: the right-continuous step function
/// r ↦ u(ř) with jumps r_1 < ... < r_n and levels F_1 ≤ ... ≤ F_n = I.
/// Below r_1 the value is 0.
class QuantumReal {
   public:
    /// Throws ChainNotMonotone for unsorted jumps, non-increasing levels, or a top
    /// level other than I. Jumps where the level does not change are dropped.
    QuantumReal(std::vector<double> jumps, std::vector<Projection> levels, const Tolerance &tol = {});

    /// r̃: a single jump at r with level I.
    static QuantumReal scalar(double r, int dim);

    int dim() const noexcept {
        return levels_.front().dim();
    }
    const std::vector<double> &jumps() const noexcept {
        return jumps_;
    }
    const std::vector<Projection> &levels() const noexcept {
        return levels_;
    }

    /// u(ř).
    Projection level_at(double r) const;

   private:
    std::vector<double> jumps_;
    std::vector<Projection> levels_;
};

/// X ↦ X̃ with X̃(ř) = E^X(r).
QuantumReal observable_to_real(const Observable &x);
/// u ↦ û = Σ r_k (F_k − F_{k−1}).
Observable real_to_observable(const QuantumReal &u, const Tolerance &tol = {});

/// One representative per constancy interval of a family of step functions: a point
/// below every jump, then each jump. Jumps within eps_compare · scale of each other are
/// merged and represented by the largest of them.
std::vector<double> evaluation_grid(std::span<const std::vector<double>> jump_sets, const Tolerance &tol = {});

/// Assigns each rational a distinct check-embedded code so that [[ř = š]] is I
/// exactly when r = s and 0 otherwise.
class RationalCodebook {
   public:
    explicit RationalCodebook(int dim) : dim_(dim) {
    }
    QSet code(double r);
    int dim() const noexcept {
        return dim_;
    }

   private:
    int dim_;
    std::map<double, QSet> codes_;
};

/// The universe element {(ř, u(ř)) : r ∈ grid}.
QSet induced_qset(const QuantumReal &u, std::span<const double> grid, RationalCodebook &codes);

/// A candidate element with domain Q̌ and finitely many breakpoints: arbitrary
/// projections at each breakpoint and on each open interval between them.
struct RealCandidate {
    std::vector<double> points;           // ascending
    std::vector<Projection> at_points;    // size n
    std::vector<Projection> on_intervals;  // size n + 1: (−∞,r_1), (r_1,r_2), ..., (r_n,∞)

    static RealCandidate from_real(const QuantumReal &u);
    /// Right-continuous step function with the given value below the first point.
    static RealCandidate step(std::vector<double> points, std::vector<Projection> levels, Projection below);
};

/// [[R(u)]]_j: ⋁u(y) ∧ (⋀u(y))⊥ ∧ ⋀_y (u(y) ⇔ ⋀_z ([[y<z]] →_j u(z))).
Projection reality_truth_value(const RealCandidate &u, ConditionalKind kind, const Tolerance &tol = {});

/// [[u = v]] = P{ψ : u(ř)ψ = v(ř)ψ for all r}.
Projection equality_truth_value(const QuantumReal &u, const QuantumReal &v, const Tolerance &tol = {});

/// The four equivalent characterizations of ψ ∈ R([[u = v]]).
struct EqualityEquivalents {
    bool in_range = false;       // ψ ∈ R([[u = v]])
    bool pointwise = false;      // u(x)ψ = v(x)ψ
    bool products = false;       // u(x)v(y)ψ = v(x∧y)ψ
    bool inner_products = false;  // ⟨u(x)ψ, v(y)ψ⟩ = ‖v(x∧y)ψ‖²
    double residuals[4] = {0, 0, 0, 0};

    bool agree() const {
        return in_range == pointwise && pointwise == products && products == inner_products;
    }
};
EqualityEquivalents equality_equivalents(const QuantumReal &u, const QuantumReal &v, const StateVector &psi,
                                         const Tolerance &tol = {});

/// f(A) = Σ f(x_k) E^A({x_k}).
Observable borel_apply(const std::function<double(double)> &f, const Observable &a, const Tolerance &tol = {});
/// Complex-valued variant; throws NonRealOutput if f takes a non-real value on the spectrum.
Observable borel_apply_complex(const std::function<Complex(double)> &f, const Observable &a,
                               const Tolerance &tol = {});

/// The five equivalent conditions for A and B to be perfectly correlated in ψ.
struct CorrelationReport {
    bool equality_range = false;       // ψ ∈ R([[Ã = B̃]])
    bool spectral_pointwise = false;   // E^A(r)ψ = E^B(r)ψ
    bool borel_functions = false;      // f(A)ψ = f(B)ψ on atom indicators
    bool disjoint_orthogonal = false;  // ⟨E^A(Δ)ψ, E^B(Γ)ψ⟩ = 0 for disjoint atoms
    bool joint_distribution = false;   // Gudder condition and diagonal mass 1
    bool gudder = false;
    double diagonal_mass = 0.0;

    bool agree() const {
        return equality_range == spectral_pointwise && spectral_pointwise == borel_functions &&
               borel_functions == disjoint_orthogonal && disjoint_orthogonal == joint_distribution;
    }
};
CorrelationReport perfect_correlation(const Observable &a, const Observable &b, const StateVector &psi,
                                      const Tolerance &tol = {});

/// X ≼ Y iff E^Y(λ) ≤ E^X(λ) for every λ.
bool spectral_order_leq(const Observable &x, const Observable &y, const Tolerance &tol = {});

/// [[X̃ ≤ Ỹ]]_j = ⋀_r E^Y(r) →_j E^X(r).
Projection order_truth_value(const Observable &x, const Observable &y, ConditionalKind kind,
                             const Tolerance &tol = {});

/// [[X̃ < Ỹ]]_j, defined as the complement of [[Ỹ ≤ X̃]]_j.
Projection strict_order_truth_value(const Observable &x, const Observable &y, ConditionalKind kind,
                                    const Tolerance &tol = {});

struct IdentityCheck {
    std::string name;
    bool holds;
    double residual;  // Frobenius distance between the two sides
};

struct QBorelReport {
    std::vector<IdentityCheck> items;
    bool all_hold() const;
};

/// Checks the six spectral identities [[X̃ ≤ t̃]] = E^X(t), [[t̃ < X̃]] = E^X((t,∞)),
/// [[s̃ < X̃ ≤ t̃]] = E^X((s,t]), [[X̃ = t̃]] = E^X({t}) and the scalar cases, for s < t.
QBorelReport qborel_identities(const Observable &x, double s, double t, ConditionalKind kind,
                               const Tolerance &tol = {});

}  // namespace qlogic
