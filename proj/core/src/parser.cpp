// Recursive-descent parser for the formula language:
//
//   formula := iff
//   iff     := imp ("<->" imp)*          left-associative
//   imp     := or ("->" imp)?            right-associative
//   or      := and ("\/" and)*
//   and     := unary ("/\" unary)*
//   unary   := "~" unary | "(" formula ")" | atom | quant
//   quant   := ("forall"|"exists") IDENT ["in" term] "(" formula ")"
//   atom    := term ("=" | "in" | "subseteq") term
//   term    := IDENT
//
// The quantifier without "in" is the unbounded form; `parse` rejects it.

#include <algorithm>
#include <cctype>
#include <optional>

#include "qlogic/formula.hpp"

namespace qlogic {

namespace {

enum class Tok { Ident, Forall, Exists, In, Subseteq, Eq, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string_view describe(Tok kind) {
    switch (kind) {
        case Tok::Ident:
            return "identifier";
        case Tok::Forall:
            return "'forall'";
        case Tok::Exists:
            return "'exists'";
        case Tok::In:
            return "'in'";
        case Tok::Subseteq:
            return "'subseteq'";
        case Tok::Eq:
            return "'='";
        case Tok::Not:
            return "'~'";
        case Tok::And:
            return "'/\\'";
        case Tok::Or:
            return "'\\/'";
        case Tok::Implies:
            return "'->'";
        case Tok::Iff:
            return "'<->'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::End:
            return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\'')) {
                ++i;
            }
            std::string word(text.substr(start, i - start));
            Tok kind = Tok::Ident;
            if (word == "forall") {
                kind = Tok::Forall;
            } else if (word == "exists") {
                kind = Tok::Exists;
            } else if (word == "in") {
                kind = Tok::In;
            } else if (word == "subseteq") {
                kind = Tok::Subseteq;
            }
            out.push_back({kind, std::move(word), start});
            continue;
        }
        if (starts("<->")) {
            out.push_back({Tok::Iff, "<->", start});
            i += 3;
        } else if (starts("->")) {
            out.push_back({Tok::Implies, "->", start});
            i += 2;
        } else if (starts("/\\")) {
            out.push_back({Tok::And, "/\\", start});
            i += 2;
        } else if (starts("\\/")) {
            out.push_back({Tok::Or, "\\/", start});
            i += 2;
        } else if (c == '~') {
            out.push_back({Tok::Not, "~", start});
            ++i;
        } else if (c == '=') {
            out.push_back({Tok::Eq, "=", start});
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", start});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + text[i] + "'", start);
        }
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
   public:
    Parser(std::string_view text, const Registry &registry, const ParseOptions &options)
        : tokens_(tokenize(text)), registry_(registry), options_(options) {
    }

    Formula parse_all() {
        Formula f = formula();
        expect(Tok::End);
        return f;
    }

    std::optional<std::size_t> first_unbounded() const {
        return first_unbounded_;
    }

   private:
    const Token &peek() const {
        return tokens_[index_];
    }
    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++index_;
            return true;
        }
        return false;
    }
    const Token &expect(Tok kind) {
        if (peek().kind != kind) {
            throw SyntaxError("expected " + std::string(describe(kind)) + ", found " +
                                  std::string(describe(peek().kind)),
                              peek().pos);
        }
        return tokens_[index_++];
    }

    Formula formula() {
        return iff();
    }

    Formula iff() {
        Formula f = imp();
        while (accept(Tok::Iff)) {
            f = Formula::iff(f, imp());
        }
        return f;
    }

    Formula imp() {
        Formula f = disj();
        if (accept(Tok::Implies)) {
            return Formula::implies(f, imp());
        }
        return f;
    }

    Formula disj() {
        Formula f = conj();
        while (accept(Tok::Or)) {
            f = Formula::disjunction(f, conj());
        }
        return f;
    }

    Formula conj() {
        Formula f = unary();
        while (accept(Tok::And)) {
            f = Formula::conjunction(f, unary());
        }
        return f;
    }

    Formula unary() {
        switch (peek().kind) {
            case Tok::Not:
                ++index_;
                return Formula::negation(unary());
            case Tok::LParen: {
                ++index_;
                Formula f = formula();
                expect(Tok::RParen);
                return f;
            }
            case Tok::Forall:
            case Tok::Exists:
                return quant();
            case Tok::Ident:
                return atom();
            default:
                throw SyntaxError("expected a formula, found " + std::string(describe(peek().kind)), peek().pos);
        }
    }

    Formula quant() {
        const Token q = tokens_[index_++];
        const bool universal = q.kind == Tok::Forall;
        const std::string var = expect(Tok::Ident).text;
        if (accept(Tok::In)) {
            Term bound = term();
            expect(Tok::LParen);
            bound_.push_back(var);
            Formula body = formula();
            bound_.pop_back();
            expect(Tok::RParen);
            return universal ? Formula::forall_in(var, std::move(bound), body)
                             : Formula::exists_in(var, std::move(bound), body);
        }
        if (!first_unbounded_) {
            first_unbounded_ = q.pos;
        }
        expect(Tok::LParen);
        bound_.push_back(var);
        Formula body = formula();
        bound_.pop_back();
        expect(Tok::RParen);
        return universal ? Formula::forall(var, body) : Formula::exists(var, body);
    }

    Formula atom() {
        Term a = term();
        const Token op = tokens_[index_];
        switch (op.kind) {
            case Tok::Eq:
                ++index_;
                return Formula::equal(std::move(a), term());
            case Tok::In:
                ++index_;
                return Formula::member(std::move(a), term());
            case Tok::Subseteq:
                ++index_;
                return Formula::subseteq(std::move(a), term());
            default:
                throw SyntaxError("expected '=', 'in' or 'subseteq', found " + std::string(describe(op.kind)), op.pos);
        }
    }

    Term term() {
        const Token &t = expect(Tok::Ident);
        if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) {
            return Term::variable(t.text);
        }
        const auto &free = options_.free_variables;
        if (std::find(free.begin(), free.end(), t.text) != free.end()) {
            return Term::variable(t.text);
        }
        if (auto it = registry_.find(t.text); it != registry_.end()) {
            return Term::name(t.text, it->second);
        }
        throw UnknownName("unknown name '" + t.text + "' at offset " + std::to_string(t.pos));
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    const Registry &registry_;
    const ParseOptions &options_;
    std::vector<std::string> bound_;
    std::optional<std::size_t> first_unbounded_;
};

}  // namespace

Formula parse_full(std::string_view text, const Registry &registry, const ParseOptions &options) {
    Parser parser(text, registry, options);
    return parser.parse_all();
}

Formula parse(std::string_view text, const Registry &registry, const ParseOptions &options) {
    Parser parser(text, registry, options);
    Formula f = parser.parse_all();
    if (auto pos = parser.first_unbounded()) {
        throw UnboundedQuantifier("unbounded quantifier at offset " + std::to_string(*pos) +
                                  " is outside the Delta0 fragment");
    }
    return f;
}

}  // namespace qlogic
