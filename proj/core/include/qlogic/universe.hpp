#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "qlogic/hfset.hpp"
#include "qlogic/lattice.hpp"

namespace qlogic {

inline constexpr int kMaxRank = 12;
inline constexpr std::size_t kMaxEntries = 64;

struct QEntry;

namespace detail {
struct QSetNode;
}

/// An element u of the Q-valued universe: a finite map from child QSets to
/// projection weights. Immutable; copies share the same node, and identity
/// (not structure) distinguishes elements.
class QSet {
   public:
    /// Validates dimensions, child distinctness and the rank/entry budgets.
    static QSet make(int dim, std::vector<QEntry> entries);
    static QSet empty(int dim);

    int dim() const;
    int rank() const;
    const std::vector<QEntry> &entries() const;
    std::size_t size() const;

    const void *id() const noexcept {
        return node_.get();
    }
    bool same(const QSet &other) const noexcept {
        return node_ == other.node_;
    }

   private:
    explicit QSet(std::shared_ptr<const detail::QSetNode> node) : node_(std::move(node)) {
    }
    std::shared_ptr<const detail::QSetNode> node_;
};

struct QEntry {
    QSet child;
    Projection weight;
};

namespace detail {
struct QSetNode {
    int dim;
    int rank;
    std::vector<QEntry> entries;
};
}  // namespace detail

inline int QSet::dim() const {
    return node_->dim;
}
inline int QSet::rank() const {
    return node_->rank;
}
inline const std::vector<QEntry> &QSet::entries() const {
    return node_->entries;
}
inline std::size_t QSet::size() const {
    return node_->entries.size();
}

/// v ↦ v̌: every weight is the identity.
QSet check_embed(const HFSet &v, int dim);

/// Atomic truth values [[u = v]] and [[u ∈ v]] by mutual rank recursion, for a
/// fixed conditional. Results are memoized per ordered pair of element identities.
class TruthEngine {
   public:
    explicit TruthEngine(ConditionalKind kind, Tolerance tol = {});

    Projection equal(const QSet &u, const QSet &v);
    Projection member(const QSet &u, const QSet &v);

    ConditionalKind kind() const noexcept {
        return kind_;
    }
    const Tolerance &tolerance() const noexcept {
        return tol_;
    }
    std::size_t memo_size() const noexcept {
        return equal_memo_.size() + member_memo_.size();
    }

   private:
    struct Key {
        const void *a;
        const void *b;
        bool operator==(const Key &) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const noexcept;
    };
    struct Memo {
        QSet u;
        QSet v;
        Projection value;
    };

    ConditionalKind kind_;
    Tolerance tol_;
    std::unordered_map<Key, Memo, KeyHash> equal_memo_;
    std::unordered_map<Key, Memo, KeyHash> member_memo_;
};

Projection truth_equal(const QSet &u, const QSet &v, ConditionalKind kind, const Tolerance &tol = {});
Projection truth_member(const QSet &u, const QSet &v, ConditionalKind kind, const Tolerance &tol = {});

/// L(u): every weight appearing anywhere in u, deduplicated up to subspace_equal.
std::vector<Projection> support(const QSet &u, const Tolerance &tol = {});
std::vector<Projection> support(std::span<const QSet> us, const Tolerance &tol = {});

/// u|_p, with u|_p(x|_p) = u(x) ∧ p recursively.
QSet restrict(const QSet &u, const Projection &p, const Tolerance &tol = {});

/// ⌣(u1, ..., un) = com(L(u1, ..., un)); the identity when the support is empty.
Projection commutator_universe(std::span<const QSet> us, const Tolerance &tol = {});

/// The same element viewed in C^(dim + extra): each weight P becomes P ⊕ 0.
QSet embed_block(const QSet &u, int extra);

}  // namespace qlogic
