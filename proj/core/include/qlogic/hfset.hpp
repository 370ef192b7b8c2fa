#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// A hereditarily finite set in canonical form (elements sorted, no duplicates).
///
/// Used as the classical side of the check embedding v ↦ v̌ and as an independent
/// set-theoretic oracle in tests.
class HFSet {
   public:
    /// The empty set.
    HFSet() = default;

    static HFSet of(std::vector<HFSet> elements);
    /// von Neumann ordinal n = {0, ..., n-1}.
    static HFSet ordinal(int n);
    /// Ackermann decoding: the elements are the sets whose codes are the set bits of n.
    /// Codes below 2^16 yield sets of rank at most 4.
    static HFSet ackermann(std::uint64_t n);
    /// Kuratowski pair {{a}, {a, b}}.
    static HFSet pair(const HFSet &a, const HFSet &b);
    /// Parses brace literals such as "{}", "{{}}", "{ {}, {{}} }". Throws SyntaxError.
    static HFSet parse(std::string_view text);

    const std::vector<HFSet> &elements() const noexcept {
        return elements_;
    }
    bool empty() const noexcept {
        return elements_.empty();
    }
    std::size_t size() const noexcept {
        return elements_.size();
    }
    bool contains(const HFSet &x) const;
    bool subset_of(const HFSet &other) const;
    int rank() const;
    std::string to_string() const;

    friend int compare(const HFSet &a, const HFSet &b);
    friend bool operator==(const HFSet &a, const HFSet &b) {
        return compare(a, b) == 0;
    }
    friend bool operator<(const HFSet &a, const HFSet &b) {
        return compare(a, b) < 0;
    }

   private:
    std::vector<HFSet> elements_;
};

}  // namespace qlogic
