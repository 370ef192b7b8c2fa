#include "qlogic/universe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

namespace qlogic {

QSet QSet::make(int dim, std::vector<QEntry> entries) {
    if (dim <= 0) {
        throw DimMismatch("QSet dimension must be positive");
    }
    if (entries.size() > kMaxEntries) {
        throw RankBudgetExceeded("QSet has " + std::to_string(entries.size()) + " entries; the budget is " +
                                 std::to_string(kMaxEntries));
    }
    int rank = 0;
    std::unordered_set<const void *> seen;
    for (const QEntry &e : entries) {
        if (e.child.dim() != dim || e.weight.dim() != dim) {
            throw DimMismatch("QSet entry dimension differs from " + std::to_string(dim));
        }
        if (!seen.insert(e.child.id()).second) {
            throw PreconditionViolated("QSet children must be pairwise distinct");
        }
        rank = std::max(rank, e.child.rank() + 1);
    }
    if (rank > kMaxRank) {
        throw RankBudgetExceeded("QSet rank " + std::to_string(rank) + " exceeds the budget of " +
                                 std::to_string(kMaxRank));
    }
    return QSet(std::make_shared<const detail::QSetNode>(detail::QSetNode{dim, rank, std::move(entries)}));
}

QSet QSet::empty(int dim) {
    return make(dim, {});
}

QSet check_embed(const HFSet &v, int dim) {
    std::map<HFSet, QSet> cache;
    const Projection one = Projection::identity(dim);
    std::function<QSet(const HFSet &)> embed = [&](const HFSet &s) -> QSet {
        if (auto it = cache.find(s); it != cache.end()) {
            return it->second;
        }
        std::vector<QEntry> entries;
        entries.reserve(s.size());
        for (const HFSet &e : s.elements()) {
            entries.push_back({embed(e), one});
        }
        QSet out = QSet::make(dim, std::move(entries));
        cache.emplace(s, out);
        return out;
    };
    return embed(v);
}

std::size_t TruthEngine::KeyHash::operator()(const Key &k) const noexcept {
    const std::size_t a = std::hash<const void *>{}(k.a);
    const std::size_t b = std::hash<const void *>{}(k.b);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

TruthEngine::TruthEngine(ConditionalKind kind, Tolerance tol) : kind_(kind), tol_(tol) {
    tol_.validate();
}

namespace {

void require_same_dim(const QSet &u, const QSet &v) {
    if (u.dim() != v.dim()) {
        throw DimMismatch("QSet dimensions differ: " + std::to_string(u.dim()) + " vs " + std::to_string(v.dim()));
    }
}

}  // namespace

Projection TruthEngine::equal(const QSet &u, const QSet &v) {
    require_same_dim(u, v);
    const Key key{u.id(), v.id()};
    if (auto it = equal_memo_.find(key); it != equal_memo_.end()) {
        return it->second.value;
    }
    Projection acc = Projection::identity(u.dim());
    for (const QEntry &e : u.entries()) {
        acc = meet(acc, conditional(kind_, e.weight, member(e.child, v), tol_), tol_);
    }
    for (const QEntry &e : v.entries()) {
        acc = meet(acc, conditional(kind_, e.weight, member(e.child, u), tol_), tol_);
    }
    equal_memo_.emplace(key, Memo{u, v, acc});
    return acc;
}

Projection TruthEngine::member(const QSet &u, const QSet &v) {
    require_same_dim(u, v);
    const Key key{u.id(), v.id()};
    if (auto it = member_memo_.find(key); it != member_memo_.end()) {
        return it->second.value;
    }
    Projection acc = Projection::zero(u.dim());
    for (const QEntry &e : v.entries()) {
        acc = join(acc, meet(e.weight, equal(u, e.child), tol_), tol_);
    }
    member_memo_.emplace(key, Memo{u, v, acc});
    return acc;
}

Projection truth_equal(const QSet &u, const QSet &v, ConditionalKind kind, const Tolerance &tol) {
    TruthEngine engine(kind, tol);
    return engine.equal(u, v);
}

Projection truth_member(const QSet &u, const QSet &v, ConditionalKind kind, const Tolerance &tol) {
    TruthEngine engine(kind, tol);
    return engine.member(u, v);
}

namespace {

void collect_support(const QSet &u, const Tolerance &tol, std::unordered_set<const void *> &visited,
                     std::vector<Projection> &out) {
    if (!visited.insert(u.id()).second) {
        return;
    }
    for (const QEntry &e : u.entries()) {
        collect_support(e.child, tol, visited, out);
        const bool known = std::any_of(out.begin(), out.end(),
                                       [&](const Projection &p) { return subspace_equal(p, e.weight, tol); });
        if (!known) {
            out.push_back(e.weight);
        }
    }
}

}  // namespace

std::vector<Projection> support(const QSet &u, const Tolerance &tol) {
    return support(std::span<const QSet>(&u, 1), tol);
}

std::vector<Projection> support(std::span<const QSet> us, const Tolerance &tol) {
    std::unordered_set<const void *> visited;
    std::vector<Projection> out;
    for (const QSet &u : us) {
        collect_support(u, tol, visited, out);
    }
    return out;
}

QSet restrict(const QSet &u, const Projection &p, const Tolerance &tol) {
    if (u.dim() != p.dim()) {
        throw DimMismatch("restriction projection dimension differs from the QSet");
    }
    std::unordered_map<const void *, QSet> cache;
    std::function<QSet(const QSet &)> go = [&](const QSet &x) -> QSet {
        if (auto it = cache.find(x.id()); it != cache.end()) {
            return it->second;
        }
        std::vector<QEntry> entries;
        entries.reserve(x.size());
        for (const QEntry &e : x.entries()) {
            entries.push_back({go(e.child), meet(e.weight, p, tol)});
        }
        QSet out = QSet::make(x.dim(), std::move(entries));
        cache.emplace(x.id(), out);
        return out;
    };
    return go(u);
}

Projection commutator_universe(std::span<const QSet> us, const Tolerance &tol) {
    if (us.empty()) {
        throw PreconditionViolated("commutator of an empty family of QSets has no ambient dimension");
    }
    for (const QSet &u : us) {
        require_same_dim(us.front(), u);
    }
    const std::vector<Projection> family = support(us, tol);
    if (family.empty()) {
        return Projection::identity(us.front().dim());
    }
    return commutator_takeuti(family, tol);
}

QSet embed_block(const QSet &u, int extra) {
    std::unordered_map<const void *, QSet> cache;
    std::function<QSet(const QSet &)> go = [&](const QSet &x) -> QSet {
        if (auto it = cache.find(x.id()); it != cache.end()) {
            return it->second;
        }
        std::vector<QEntry> entries;
        entries.reserve(x.size());
        for (const QEntry &e : x.entries()) {
            entries.push_back({go(e.child), e.weight.embed(extra)});
        }
        QSet out = QSet::make(x.dim() + extra, std::move(entries));
        cache.emplace(x.id(), out);
        return out;
    };
    return go(u);
}

}  // namespace qlogic
