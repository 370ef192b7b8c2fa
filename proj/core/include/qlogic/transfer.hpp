#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qlogic/formula.hpp"

namespace qlogic {

struct TransferResult {
    Projection lhs;  // ⌣(u1, ..., un)
    Projection rhs;  // [[φ(u1, ..., un)]]_j
    bool holds;      // lhs ≤ rhs
};

/// Evaluates both sides of ⌣(us) ≤ [[φ(us)]]_j for a formula taken to be ZFC-provable.
TransferResult transfer_check(const Formula &phi, const Bindings &us, ConditionalKind kind,
                              const Tolerance &tol = {});

/// Checks [[φ(us)]] ∧ p = [[φ(us|_p)]] ∧ p.
///
/// Throws PreconditionViolated unless p commutes with every projection in the
/// support of the bound elements.
bool restriction_check(const Formula &phi, const Bindings &us, const Projection &p, ConditionalKind kind,
                       const Tolerance &tol = {});

/// A Δ0 formula provable in ZFC, over the free variables x, y, w, z.
struct CorpusFormula {
    std::string_view name;
    std::string_view text;
};

/// The shipped corpus of ten ZFC-provable Δ0 formulas.
std::span<const CorpusFormula> zfc_corpus();

/// Free variables used throughout the corpus.
inline constexpr std::string_view kCorpusVariables[] = {"x", "y", "w", "z"};

Formula parse_corpus_formula(const CorpusFormula &entry);

}  // namespace qlogic
