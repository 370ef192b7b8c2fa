#include "qlogic/hfset.hpp"

#include <algorithm>
#include <cctype>

#include "qlogic/errors.hpp"

namespace qlogic {

int compare(const HFSet &a, const HFSet &b) {
    if (a.elements_.size() != b.elements_.size()) {
        return a.elements_.size() < b.elements_.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.elements_.size(); ++i) {
        const int c = compare(a.elements_[i], b.elements_[i]);
        if (c != 0) {
            return c;
        }
    }
    return 0;
}

HFSet HFSet::of(std::vector<HFSet> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    HFSet out;
    out.elements_ = std::move(elements);
    return out;
}

HFSet HFSet::ordinal(int n) {
    std::vector<HFSet> members;
    HFSet current;
    for (int k = 0; k < n; ++k) {
        members.push_back(current);
        current = of(members);
    }
    return current;
}

HFSet HFSet::ackermann(std::uint64_t n) {
    std::vector<HFSet> members;
    for (std::uint64_t bit = 0; bit < 64; ++bit) {
        if ((n >> bit) & 1u) {
            members.push_back(ackermann(bit));
        }
    }
    return of(std::move(members));
}

HFSet HFSet::pair(const HFSet &a, const HFSet &b) {
    return of({of({a}), of({a, b})});
}

namespace {

struct BraceParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    HFSet set() {
        skip();
        if (pos >= text.size() || text[pos] != '{') {
            throw SyntaxError("expected '{'", pos);
        }
        ++pos;
        std::vector<HFSet> members;
        skip();
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            return HFSet::of(std::move(members));
        }
        while (true) {
            members.push_back(set());
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                return HFSet::of(std::move(members));
            }
            throw SyntaxError("expected ',' or '}'", pos);
        }
    }
};

}  // namespace

HFSet HFSet::parse(std::string_view text) {
    BraceParser parser{text};
    HFSet out = parser.set();
    parser.skip();
    if (parser.pos != text.size()) {
        throw SyntaxError("trailing characters after set literal", parser.pos);
    }
    return out;
}

bool HFSet::contains(const HFSet &x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool HFSet::subset_of(const HFSet &other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

int HFSet::rank() const {
    int r = 0;
    for (const HFSet &e : elements_) {
        r = std::max(r, e.rank() + 1);
    }
    return r;
}

std::string HFSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += elements_[i].to_string();
    }
    out += "}";
    return out;
}

}  // namespace qlogic
