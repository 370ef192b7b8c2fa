#include "qlogic/transfer.hpp"

namespace qlogic {

namespace {

std::vector<QSet> bound_values(const Bindings &us) {
    std::vector<QSet> out;
    out.reserve(us.size());
    for (const auto &[name, value] : us) {
        out.push_back(value);
    }
    return out;
}

}  // namespace

TransferResult transfer_check(const Formula &phi, const Bindings &us, ConditionalKind kind, const Tolerance &tol) {
    const std::vector<QSet> values = bound_values(us);
    if (values.empty()) {
        throw PreconditionViolated("transfer_check needs at least one bound QSet");
    }
    Projection lhs = commutator_universe(values, tol);
    Projection rhs = evaluate(phi, kind, us, tol).value;
    const bool holds = leq(lhs, rhs, tol);
    return TransferResult{std::move(lhs), std::move(rhs), holds};
}

bool restriction_check(const Formula &phi, const Bindings &us, const Projection &p, ConditionalKind kind,
                       const Tolerance &tol) {
    const std::vector<QSet> values = bound_values(us);
    for (const Projection &q : support(values, tol)) {
        if (!commutes(p, q, tol)) {
            throw PreconditionViolated("restriction projection does not commute with the support");
        }
    }
    Bindings restricted;
    for (const auto &[name, value] : us) {
        restricted.emplace(name, restrict(value, p, tol));
    }
    const Projection original = meet(evaluate(phi, kind, us, tol).value, p, tol);
    const Projection after = meet(evaluate(phi, kind, restricted, tol).value, p, tol);
    return subspace_equal(original, after, tol);
}

}  // namespace qlogic
