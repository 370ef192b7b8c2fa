#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/linalg.hpp"

namespace qlogic {

/// The three material conditionals on an orthomodular lattice.
enum class ConditionalKind { Sasaki, Contrapositive, Relevance };

inline constexpr ConditionalKind kAllConditionals[] = {ConditionalKind::Sasaki, ConditionalKind::Contrapositive,
                                                       ConditionalKind::Relevance};

std::string_view to_string(ConditionalKind kind);
/// Accepts "sasaki", "contrapositive", "relevance" and the one-letter forms S, C, R.
std::optional<ConditionalKind> parse_conditional_kind(std::string_view text);

// Lattice operations on Q(C^d). Every binary operation throws DimMismatch when the
// ambient dimensions differ.

Projection ortho(const Projection &p);
bool leq(const Projection &p, const Projection &q, const Tolerance &tol = {});
Projection meet(const Projection &p, const Projection &q, const Tolerance &tol = {});
Projection join(const Projection &p, const Projection &q, const Tolerance &tol = {});
bool commutes(const Projection &p, const Projection &q, const Tolerance &tol = {});

/// Meet / join of a family; `dim` supplies the ambient dimension for the empty family
/// (I for the empty meet, 0 for the empty join).
Projection meet_all(std::span<const Projection> family, int dim, const Tolerance &tol = {});
Projection join_all(std::span<const Projection> family, int dim, const Tolerance &tol = {});

/// (PQ)^n, computed by repeated squaring. Converges to P ∧ Q; kept as an
/// independent route for checking `meet`.
ComplexMatrix meet_by_iteration(const Projection &p, const Projection &q, long long iterations = 50);

/// Marsden commutator (P∧Q)∨(P∧Q⊥)∨(P⊥∧Q)∨(P⊥∧Q⊥).
Projection commutator_pair(const Projection &p, const Projection &q, const Tolerance &tol = {});

inline constexpr std::size_t kMaxCommutatorSet = 16;

/// Bruns–Kalmbach commutator: join over all sign assignments of the meet of signed members.
/// Throws SetTooLarge for more than 16 members.
Projection commutator_set(std::span<const Projection> family, const Tolerance &tol = {});

/// Projection onto {ψ : [P1,P2]P3 ψ = 0 for all P1,P2,P3 in the family}.
Projection commutator_takeuti(std::span<const Projection> family, const Tolerance &tol = {});

/// Lattice-polynomial form of the conditional P →_j Q.
Projection conditional(ConditionalKind kind, const Projection &p, const Projection &q, const Tolerance &tol = {});

/// Null-space characterization of P →_j Q:
///   Sasaki         {ψ : Q⊥Pψ = 0}
///   Contrapositive {ψ : PQ⊥ψ = 0}
///   Relevance      both.
Projection conditional_range(ConditionalKind kind, const Projection &p, const Projection &q,
                             const Tolerance &tol = {});

/// (P →_j Q) ∧ (Q →_j P); the result does not depend on `kind`.
Projection biconditional(ConditionalKind kind, const Projection &p, const Projection &q, const Tolerance &tol = {});

/// (P∧Q) ∨ (P⊥∧Q⊥).
Projection biconditional_polynomial(const Projection &p, const Projection &q, const Tolerance &tol = {});

/// Projection onto {ψ : Pψ = Qψ}.
Projection biconditional_range(const Projection &p, const Projection &q, const Tolerance &tol = {});

}  // namespace qlogic
