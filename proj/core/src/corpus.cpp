#include <array>
#include <string>

#include "qlogic/transfer.hpp"

namespace qlogic {

namespace {

constexpr std::array<CorpusFormula, 10> kCorpus{{
    {"eq_reflexive", "x = x"},
    {"eq_symmetric", "x = y -> y = x"},
    {"eq_transitive", "(x = y /\\ y = w) -> x = w"},
    {"subset_reflexive", "x subseteq x"},
    {"subset_transitive", "(x subseteq y /\\ y subseteq w) -> x subseteq w"},
    {"eq_iff_subsets", "x = y <-> (x subseteq y /\\ y subseteq x)"},
    {"member_congruence", "(x = y /\\ z in x) -> z in y"},
    {"excluded_middle", "z in x \\/ ~(z in x)"},
    {"converse_witness", "z in x <-> ((z in x /\\ z in y) \\/ (z in x /\\ ~(z in y)))"},
    {"elements_self_equal", "forall a in x (exists b in x (a = b))"},
}};

}  // namespace

std::span<const CorpusFormula> zfc_corpus() {
    return kCorpus;
}

Formula parse_corpus_formula(const CorpusFormula &entry) {
    ParseOptions options;
    for (std::string_view v : kCorpusVariables) {
        options.free_variables.emplace_back(v);
    }
    return parse(entry.text, {}, options);
}

}  // namespace qlogic
