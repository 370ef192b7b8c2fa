#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/universe.hpp"

namespace qlogic {

/// A term of L(∈, V^(Q)): either a variable or a name bound to a registered QSet.
struct Term {
    enum class Kind { Variable, Name };

    Kind kind = Kind::Variable;
    std::string ident;
    std::optional<QSet> value;  // set iff kind == Name

    static Term variable(std::string ident);
    static Term name(std::string ident, QSet value);
};

enum class FormulaKind { Equal, Member, Not, And, Or, Implies, Iff, ForallIn, ExistsIn, Forall, Exists };

namespace detail {
struct FormulaNode;
}

/// Immutable formula AST handle. Subformulas are shared, never mutated.
class Formula {
   public:
    static Formula equal(Term a, Term b);
    static Formula member(Term a, Term b);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);
    static Formula forall_in(std::string var, Term bound, Formula body);
    static Formula exists_in(std::string var, Term bound, Formula body);
    /// Unbounded quantifiers: representable but not evaluable.
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);
    /// a ⊆ b, desugared to ∀x ∈ a (x ∈ b) with a fresh bound variable.
    static Formula subseteq(Term a, Term b);

    FormulaKind kind() const;
    /// Atom operands (Equal, Member).
    const Term &lhs() const;
    const Term &rhs() const;
    /// Connective operands; `left()` is the sole operand of Not.
    const Formula &left() const;
    const Formula &right() const;
    /// Quantifier parts.
    const std::string &variable() const;
    const Term &bound() const;
    const Formula &body() const;

    /// True iff no unbounded quantifier occurs.
    bool is_delta0() const;

   private:
    explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {
    }
    std::shared_ptr<const detail::FormulaNode> node_;
};

/// Free variables (names excluded).
std::set<std::string> free_variables(const Formula &f);

/// Structural equality; names compare by identifier and QSet identity.
bool structurally_equal(const Formula &a, const Formula &b);

/// Concrete syntax accepted by `parse`, with every binary connective parenthesized.
std::string to_string(const Formula &f);

using Registry = std::map<std::string, QSet, std::less<>>;
using Bindings = std::map<std::string, QSet, std::less<>>;

struct ParseOptions {
    /// Identifiers that parse as free variables rather than registry names.
    std::vector<std::string> free_variables;
};

/// Parses the full language, including unbounded `forall x (...)` / `exists x (...)`.
///
/// Identifiers resolve to the innermost bound variable, then to a declared free
/// variable, then to a registry name; anything else raises UnknownName.
Formula parse_full(std::string_view text, const Registry &registry = {}, const ParseOptions &options = {});

/// As `parse_full`, but rejects unbounded quantifiers with UnboundedQuantifier.
Formula parse(std::string_view text, const Registry &registry = {}, const ParseOptions &options = {});

/// The projection [[φ]]_j together with the conditional that produced it.
struct TruthValue {
    Projection value;
    ConditionalKind conditional_used;
};

/// Evaluates Δ0 formulas under one conditional. Atomic truth values are memoized
/// across calls on the same instance; an instance is not thread-safe.
class Evaluator {
   public:
    explicit Evaluator(ConditionalKind kind, Tolerance tol = {});

    /// Throws UnboundVariable, DimMismatch, or UnboundedQuantifier.
    TruthValue evaluate(const Formula &f, const Bindings &env = {});

    TruthEngine &atoms() noexcept {
        return engine_;
    }

   private:
    TruthEngine engine_;
};

TruthValue evaluate(const Formula &f, ConditionalKind kind, const Bindings &env = {}, const Tolerance &tol = {});

}  // namespace qlogic
