#include "qlogic/lattice.hpp"

#include <cctype>
#include <string>

namespace qlogic {

std::string_view to_string(ConditionalKind kind) {
    switch (kind) {
        case ConditionalKind::Sasaki:
            return "sasaki";
        case ConditionalKind::Contrapositive:
            return "contrapositive";
        case ConditionalKind::Relevance:
            return "relevance";
    }
    return "unknown";
}

std::optional<ConditionalKind> parse_conditional_kind(std::string_view text) {
    std::string lower;
    for (char c : text) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "sasaki" || lower == "s") {
        return ConditionalKind::Sasaki;
    }
    if (lower == "contrapositive" || lower == "c") {
        return ConditionalKind::Contrapositive;
    }
    if (lower == "relevance" || lower == "r") {
        return ConditionalKind::Relevance;
    }
    return std::nullopt;
}

namespace {

ComplexMatrix identity_like(const Projection &p) {
    return ComplexMatrix::Identity(p.dim(), p.dim());
}

// Commutation far below eps_compare: the product is then the meet up to rounding.
constexpr double kExactCommute = 1e-12;

}  // namespace

Projection ortho(const Projection &p) {
    return Projection::from_trusted(identity_like(p) - p.matrix());
}

bool leq(const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    return (p.matrix() - q.matrix() * p.matrix()).norm() <= tol.eps_compare;
}

Projection meet(const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    const ComplexMatrix pq = p.matrix() * q.matrix();
    if ((pq - q.matrix() * p.matrix()).norm() <= kExactCommute) {
        return Projection::from_trusted(pq);
    }
    // v ∈ R(P) ∩ R(Q) iff both positive summands annihilate v.
    const ComplexMatrix id = identity_like(p);
    return nullspace_projection((id - p.matrix()) + (id - q.matrix()), tol);
}

Projection join(const Projection &p, const Projection &q, const Tolerance &tol) {
    return ortho(meet(ortho(p), ortho(q), tol));
}

bool commutes(const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    const ComplexMatrix pq = p.matrix() * q.matrix();
    return (pq - q.matrix() * p.matrix()).norm() <= tol.eps_compare;
}

Projection meet_all(std::span<const Projection> family, int dim, const Tolerance &tol) {
    Projection acc = Projection::identity(dim);
    for (const Projection &p : family) {
        acc = meet(acc, p, tol);
    }
    return acc;
}

Projection join_all(std::span<const Projection> family, int dim, const Tolerance &tol) {
    Projection acc = Projection::zero(dim);
    for (const Projection &p : family) {
        acc = join(acc, p, tol);
    }
    return acc;
}

ComplexMatrix meet_by_iteration(const Projection &p, const Projection &q, long long iterations) {
    require_same_dim(p, q);
    ComplexMatrix base = p.matrix() * q.matrix();
    ComplexMatrix result = identity_like(p);
    while (iterations > 0) {
        if (iterations & 1) {
            result = result * base;
        }
        base = base * base;
        iterations >>= 1;
    }
    return result;
}

Projection commutator_pair(const Projection &p, const Projection &q, const Tolerance &tol) {
    const Projection pc = ortho(p);
    const Projection qc = ortho(q);
    Projection acc = join(meet(p, q, tol), meet(p, qc, tol), tol);
    acc = join(acc, meet(pc, q, tol), tol);
    return join(acc, meet(pc, qc, tol), tol);
}

namespace {

void require_family(std::span<const Projection> family) {
    if (family.empty()) {
        throw PreconditionViolated("commutator of an empty family has no ambient dimension");
    }
    for (const Projection &p : family) {
        require_same_dim(family.front(), p);
    }
}

// Depth-first walk over sign assignments; prefixes whose meet vanishes are pruned.
void signed_meets(std::span<const Projection> family, std::size_t index, const Projection &prefix,
                  const Tolerance &tol, ComplexMatrix &sum) {
    if (prefix.is_zero(tol)) {
        return;
    }
    if (index == family.size()) {
        sum += prefix.matrix();
        return;
    }
    const Projection &p = family[index];
    signed_meets(family, index + 1, meet(prefix, p, tol), tol, sum);
    signed_meets(family, index + 1, meet(prefix, ortho(p), tol), tol, sum);
}

}  // namespace

Projection commutator_set(std::span<const Projection> family, const Tolerance &tol) {
    require_family(family);
    if (family.size() > kMaxCommutatorSet) {
        throw SetTooLarge("commutator_set supports at most 16 projections, got " + std::to_string(family.size()));
    }
    const int d = family.front().dim();
    // Distinct sign assignments give pairwise orthogonal meets, so their join is their sum.
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    signed_meets(family, 0, Projection::identity(d), tol, sum);
    return Projection::from_trusted(sum);
}

Projection commutator_takeuti(std::span<const Projection> family, const Tolerance &tol) {
    require_family(family);
    const int d = family.front().dim();
    ComplexMatrix gram = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const ComplexMatrix &a = family[i].matrix();
            const ComplexMatrix &b = family[j].matrix();
            const ComplexMatrix c = a * b - b * a;
            const ComplexMatrix cc = c.adjoint() * c;
            // [P1,P2] and [P2,P1] differ by sign, so each unordered pair counts twice.
            for (const Projection &p3 : family) {
                gram += 2.0 * (p3.matrix() * cc * p3.matrix());
            }
        }
    }
    return nullspace_projection(gram, tol);
}

Projection conditional(ConditionalKind kind, const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    switch (kind) {
        case ConditionalKind::Sasaki:
            return join(ortho(p), meet(p, q, tol), tol);
        case ConditionalKind::Contrapositive:
            return join(ortho(join(p, q, tol)), q, tol);
        case ConditionalKind::Relevance: {
            const Projection pc = ortho(p);
            Projection acc = join(meet(p, q, tol), meet(pc, q, tol), tol);
            return join(acc, meet(pc, ortho(q), tol), tol);
        }
    }
    throw PreconditionViolated("unknown conditional kind");
}

Projection conditional_range(ConditionalKind kind, const Projection &p, const Projection &q,
                             const Tolerance &tol) {
    require_same_dim(p, q);
    const ComplexMatrix qc = ortho(q).matrix();
    const ComplexMatrix sasaki = qc * p.matrix();
    const ComplexMatrix contra = p.matrix() * qc;
    switch (kind) {
        case ConditionalKind::Sasaki:
            return nullspace_projection(sasaki.adjoint() * sasaki, tol);
        case ConditionalKind::Contrapositive:
            return nullspace_projection(contra.adjoint() * contra, tol);
        case ConditionalKind::Relevance:
            return nullspace_projection(sasaki.adjoint() * sasaki + contra.adjoint() * contra, tol);
    }
    throw PreconditionViolated("unknown conditional kind");
}

Projection biconditional(ConditionalKind kind, const Projection &p, const Projection &q, const Tolerance &tol) {
    return meet(conditional(kind, p, q, tol), conditional(kind, q, p, tol), tol);
}

Projection biconditional_polynomial(const Projection &p, const Projection &q, const Tolerance &tol) {
    return join(meet(p, q, tol), meet(ortho(p), ortho(q), tol), tol);
}

Projection biconditional_range(const Projection &p, const Projection &q, const Tolerance &tol) {
    require_same_dim(p, q);
    const ComplexMatrix diff = p.matrix() - q.matrix();
    return nullspace_projection(diff.adjoint() * diff, tol);
}

}  // namespace qlogic
