#include "qlogic/formula.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

namespace qlogic {

namespace detail {
struct FormulaNode {
    FormulaKind kind;
    Term a;  // atom lhs, or quantifier bound
    Term b;  // atom rhs
    std::vector<Formula> children;
    std::string var;
};
}  // namespace detail

Term Term::variable(std::string ident) {
    return Term{Kind::Variable, std::move(ident), std::nullopt};
}

Term Term::name(std::string ident, QSet value) {
    return Term{Kind::Name, std::move(ident), std::move(value)};
}

namespace {

using Node = detail::FormulaNode;

std::atomic<unsigned> fresh_counter{0};

}  // namespace

Formula Formula::equal(Term a, Term b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Equal, std::move(a), std::move(b), {}, {}}));
}

Formula Formula::member(Term a, Term b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Member, std::move(a), std::move(b), {}, {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, {}, {}, {std::move(f)}, {}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::And, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::implies(Formula a, Formula b) {
    return Formula(
        std::make_shared<const Node>(Node{FormulaKind::Implies, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::iff(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Iff, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::forall_in(std::string var, Term bound, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::ForallIn, std::move(bound), {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::exists_in(std::string var, Term bound, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::ExistsIn, std::move(bound), {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::forall(std::string var, Formula body) {
    return Formula(
        std::make_shared<const Node>(Node{FormulaKind::Forall, {}, {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::exists(std::string var, Formula body) {
    return Formula(
        std::make_shared<const Node>(Node{FormulaKind::Exists, {}, {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::subseteq(Term a, Term b) {
    std::string var;
    do {
        var = "_s" + std::to_string(fresh_counter.fetch_add(1));
    } while (var == a.ident || var == b.ident);
    return forall_in(var, std::move(a), member(Term::variable(var), std::move(b)));
}

FormulaKind Formula::kind() const {
    return node_->kind;
}
const Term &Formula::lhs() const {
    return node_->a;
}
const Term &Formula::rhs() const {
    return node_->b;
}
const Formula &Formula::left() const {
    return node_->children.at(0);
}
const Formula &Formula::right() const {
    return node_->children.at(1);
}
const std::string &Formula::variable() const {
    return node_->var;
}
const Term &Formula::bound() const {
    return node_->a;
}
const Formula &Formula::body() const {
    return node_->children.at(0);
}

bool Formula::is_delta0() const {
    if (node_->kind == FormulaKind::Forall || node_->kind == FormulaKind::Exists) {
        return false;
    }
    for (const Formula &c : node_->children) {
        if (!c.is_delta0()) {
            return false;
        }
    }
    return true;
}

namespace {

void collect_free(const Formula &f, std::vector<std::string> &bound, std::set<std::string> &out) {
    auto visit_term = [&](const Term &t) {
        if (t.kind == Term::Kind::Variable && std::find(bound.begin(), bound.end(), t.ident) == bound.end()) {
            out.insert(t.ident);
        }
    };
    switch (f.kind()) {
        case FormulaKind::Equal:
        case FormulaKind::Member:
            visit_term(f.lhs());
            visit_term(f.rhs());
            return;
        case FormulaKind::Not:
            collect_free(f.left(), bound, out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
            return;
        case FormulaKind::ForallIn:
        case FormulaKind::ExistsIn:
            visit_term(f.bound());
            [[fallthrough]];
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            bound.push_back(f.variable());
            collect_free(f.body(), bound, out);
            bound.pop_back();
            return;
    }
}

bool terms_equal(const Term &a, const Term &b) {
    if (a.kind != b.kind || a.ident != b.ident) {
        return false;
    }
    if (a.kind == Term::Kind::Name) {
        return a.value.has_value() && b.value.has_value() && a.value->same(*b.value);
    }
    return true;
}

std::string_view connective(FormulaKind kind) {
    switch (kind) {
        case FormulaKind::And:
            return " /\\ ";
        case FormulaKind::Or:
            return " \\/ ";
        case FormulaKind::Implies:
            return " -> ";
        case FormulaKind::Iff:
            return " <-> ";
        default:
            return " ? ";
    }
}

}  // namespace

std::set<std::string> free_variables(const Formula &f) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(f, bound, out);
    return out;
}

bool structurally_equal(const Formula &a, const Formula &b) {
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case FormulaKind::Equal:
        case FormulaKind::Member:
            return terms_equal(a.lhs(), b.lhs()) && terms_equal(a.rhs(), b.rhs());
        case FormulaKind::Not:
            return structurally_equal(a.left(), b.left());
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            return structurally_equal(a.left(), b.left()) && structurally_equal(a.right(), b.right());
        case FormulaKind::ForallIn:
        case FormulaKind::ExistsIn:
            return a.variable() == b.variable() && terms_equal(a.bound(), b.bound()) &&
                   structurally_equal(a.body(), b.body());
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            return a.variable() == b.variable() && structurally_equal(a.body(), b.body());
    }
    return false;
}

std::string to_string(const Formula &f) {
    switch (f.kind()) {
        case FormulaKind::Equal:
            return f.lhs().ident + " = " + f.rhs().ident;
        case FormulaKind::Member:
            return f.lhs().ident + " in " + f.rhs().ident;
        case FormulaKind::Not:
            return "~(" + to_string(f.left()) + ")";
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            return "(" + to_string(f.left()) + std::string(connective(f.kind())) + to_string(f.right()) + ")";
        case FormulaKind::ForallIn:
            return "forall " + f.variable() + " in " + f.bound().ident + " (" + to_string(f.body()) + ")";
        case FormulaKind::ExistsIn:
            return "exists " + f.variable() + " in " + f.bound().ident + " (" + to_string(f.body()) + ")";
        case FormulaKind::Forall:
            return "forall " + f.variable() + " (" + to_string(f.body()) + ")";
        case FormulaKind::Exists:
            return "exists " + f.variable() + " (" + to_string(f.body()) + ")";
    }
    return "?";
}

Evaluator::Evaluator(ConditionalKind kind, Tolerance tol) : engine_(kind, tol) {
}

namespace {

class Scope {
   public:
    explicit Scope(const Bindings &env) : env_(env) {
    }

    QSet resolve(const Term &t) const {
        if (t.kind == Term::Kind::Name) {
            return *t.value;
        }
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            if (it->first == t.ident) {
                return it->second;
            }
        }
        if (auto it = env_.find(t.ident); it != env_.end()) {
            return it->second;
        }
        throw UnboundVariable("variable '" + t.ident + "' has no binding");
    }

    void push(const std::string &var, const QSet &value) {
        stack_.emplace_back(var, value);
    }
    void pop() {
        stack_.pop_back();
    }

   private:
    const Bindings &env_;
    std::vector<std::pair<std::string, QSet>> stack_;
};

void collect_name_dims(const Formula &f, std::vector<std::pair<std::string, int>> &out) {
    auto visit_term = [&](const Term &t) {
        if (t.kind == Term::Kind::Name) {
            out.emplace_back(t.ident, t.value->dim());
        }
    };
    switch (f.kind()) {
        case FormulaKind::Equal:
        case FormulaKind::Member:
            visit_term(f.lhs());
            visit_term(f.rhs());
            return;
        case FormulaKind::Not:
            collect_name_dims(f.left(), out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
        case FormulaKind::Iff:
            collect_name_dims(f.left(), out);
            collect_name_dims(f.right(), out);
            return;
        case FormulaKind::ForallIn:
        case FormulaKind::ExistsIn:
            visit_term(f.bound());
            [[fallthrough]];
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            collect_name_dims(f.body(), out);
            return;
    }
}

Projection eval(const Formula &f, Scope &scope, TruthEngine &engine) {
    const Tolerance &tol = engine.tolerance();
    const ConditionalKind kind = engine.kind();
    switch (f.kind()) {
        case FormulaKind::Equal:
            return engine.equal(scope.resolve(f.lhs()), scope.resolve(f.rhs()));
        case FormulaKind::Member:
            return engine.member(scope.resolve(f.lhs()), scope.resolve(f.rhs()));
        case FormulaKind::Not:
            return ortho(eval(f.left(), scope, engine));
        case FormulaKind::And:
            return meet(eval(f.left(), scope, engine), eval(f.right(), scope, engine), tol);
        case FormulaKind::Or:
            return join(eval(f.left(), scope, engine), eval(f.right(), scope, engine), tol);
        case FormulaKind::Implies:
            return conditional(kind, eval(f.left(), scope, engine), eval(f.right(), scope, engine), tol);
        case FormulaKind::Iff:
            return biconditional(kind, eval(f.left(), scope, engine), eval(f.right(), scope, engine), tol);
        case FormulaKind::ForallIn: {
            const QSet u = scope.resolve(f.bound());
            Projection acc = Projection::identity(u.dim());
            for (const QEntry &e : u.entries()) {
                scope.push(f.variable(), e.child);
                const Projection body = eval(f.body(), scope, engine);
                scope.pop();
                acc = meet(acc, conditional(kind, e.weight, body, tol), tol);
            }
            return acc;
        }
        case FormulaKind::ExistsIn: {
            const QSet u = scope.resolve(f.bound());
            Projection acc = Projection::zero(u.dim());
            for (const QEntry &e : u.entries()) {
                scope.push(f.variable(), e.child);
                const Projection body = eval(f.body(), scope, engine);
                scope.pop();
                acc = join(acc, meet(e.weight, body, tol), tol);
            }
            return acc;
        }
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            break;
    }
    throw UnboundedQuantifier("unbounded quantifier over '" + f.variable() +
                              "' ranges over the whole universe and cannot be evaluated");
}

}  // namespace

TruthValue Evaluator::evaluate(const Formula &f, const Bindings &env) {
    if (!f.is_delta0()) {
        throw UnboundedQuantifier("formula is not Delta0: only bounded quantifiers can be evaluated");
    }
    std::vector<std::pair<std::string, int>> dims;
    for (const auto &[name, value] : env) {
        dims.emplace_back(name, value.dim());
    }
    collect_name_dims(f, dims);
    for (const auto &[name, d] : dims) {
        if (d != dims.front().second) {
            throw DimMismatch("'" + name + "' has dimension " + std::to_string(d) + ", expected " +
                              std::to_string(dims.front().second));
        }
    }
    Scope scope(env);
    return TruthValue{eval(f, scope, engine_), engine_.kind()};
}

TruthValue evaluate(const Formula &f, ConditionalKind kind, const Bindings &env, const Tolerance &tol) {
    Evaluator evaluator(kind, tol);
    return evaluator.evaluate(f, env);
}

}  // namespace qlogic
