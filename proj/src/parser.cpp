#include "choral/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace choral {

namespace {

enum class Tok { Ident, Nat, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
        int tl = line, tc = col;
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Nat, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (c == ':' && i + 1 < text.size() && text[i + 1] == '-') {
            out.push_back({Tok::Symbol, ":-", tl, tc});
            advance(2);
            continue;
        }
        if (c == '!' && i + 1 < text.size() && text[i + 1] == '=') {
            out.push_back({Tok::Symbol, "!=", tl, tc});
            advance(2);
            continue;
        }
        static const std::string singles = ".,;{}()[]=|";
        if (singles.find(c) != std::string::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), tl, tc});
            advance(1);
            continue;
        }
        throw ParseError(tl, tc, "unexpected character", std::string(1, c));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// Untyped syntax tree: atom names are resolved against the signature in
// a second pass, after every name has been seen.
struct RawCatom {
    enum class Kind { Atom, NotAtom, Card, Count, Explicit } kind;
    int line = 0, col = 0;
    std::vector<std::string> names;                 // dom / the single atom
    std::vector<std::vector<std::string>> subsets;  // Explicit satisfiers
    unsigned lo = 0;
    std::optional<unsigned> hi;
    unsigned k = 0;
    bool neq = false;  // Count: true for !=
};

struct RawRule {
    std::vector<std::string> disjuncts;  // non-empty ⇒ disjunctive head
    std::optional<RawCatom> head;        // set otherwise
    std::vector<RawCatom> body;
    int line = 0, col = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    std::vector<RawRule> rules() {
        std::vector<RawRule> out;
        while (peek().kind != Tok::End) out.push_back(rule());
        return out;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg, t.text);
    }
    Token expect_symbol(const std::string& sym) {
        Token t = next();
        if (t.kind != Tok::Symbol || t.text != sym) fail(t, "expected '" + sym + "'");
        return t;
    }
    std::string ident() {
        Token t = next();
        if (t.kind != Tok::Ident) fail(t, "expected an atom name");
        if (t.text == "not") fail(t, "'not' is a keyword, not an atom name");
        return t.text;
    }
    unsigned nat() {
        Token t = next();
        if (t.kind != Tok::Nat) fail(t, "expected a number");
        unsigned long v = std::stoul(t.text);
        if (v > 64) fail(t, "bound out of range");
        return static_cast<unsigned>(v);
    }
    bool at_symbol(const std::string& sym, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Symbol && t.text == sym;
    }

    std::vector<std::string> atom_list_semicolon() {
        std::vector<std::string> out{ident()};
        while (at_symbol(";")) { next(); out.push_back(ident()); }
        return out;
    }

    RawCatom catom() {
        const Token& t = peek();
        RawCatom raw;
        raw.line = t.line;
        raw.col = t.col;
        if (t.kind == Tok::Ident && t.text == "not") {
            next();
            raw.kind = RawCatom::Kind::NotAtom;
            raw.names.push_back(ident());
            return raw;
        }
        if (t.kind == Tok::Ident && t.text == "choice" && at_symbol("(", 1)) {
            next();
            expect_symbol("(");
            expect_symbol("[");
            raw.kind = RawCatom::Kind::Explicit;
            if (!at_symbol("]")) raw.names = atom_list_semicolon();
            expect_symbol("]");
            expect_symbol(",");
            expect_symbol("[");
            if (!at_symbol("]")) {
                while (true) {
                    expect_symbol("[");
                    std::vector<std::string> subset;
                    if (!at_symbol("]")) subset = atom_list_semicolon();
                    expect_symbol("]");
                    raw.subsets.push_back(std::move(subset));
                    if (!at_symbol(";")) break;
                    next();
                }
            }
            expect_symbol("]");
            expect_symbol(")");
            return raw;
        }
        if (t.kind == Tok::Ident) {
            raw.kind = RawCatom::Kind::Atom;
            raw.names.push_back(ident());
            return raw;
        }
        if (t.kind == Tok::Nat || at_symbol("{")) {
            std::optional<unsigned> lo;
            if (t.kind == Tok::Nat) lo = nat();
            expect_symbol("{");
            raw.names = atom_list_semicolon();
            expect_symbol("}");
            if (!lo && (at_symbol("=") || at_symbol("!="))) {
                raw.kind = RawCatom::Kind::Count;
                raw.neq = next().text == "!=";
                raw.k = nat();
                return raw;
            }
            raw.kind = RawCatom::Kind::Card;
            raw.lo = lo.value_or(0);
            if (peek().kind == Tok::Nat) raw.hi = nat();
            return raw;
        }
        fail(t, "expected a choice atom");
    }

    RawRule rule() {
        RawRule out;
        out.line = peek().line;
        out.col = peek().col;
        RawCatom first = catom();
        if (at_symbol("|")) {
            if (first.kind != RawCatom::Kind::Atom)
                fail(peek(), "disjunctive heads may only contain plain atoms");
            out.disjuncts.push_back(first.names.front());
            while (at_symbol("|")) { next(); out.disjuncts.push_back(ident()); }
        } else {
            out.head = std::move(first);
        }
        if (at_symbol(":-")) {
            next();
            out.body.push_back(catom());
            while (at_symbol(",")) { next(); out.body.push_back(catom()); }
        }
        expect_symbol(".");
        return out;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void collect_names(const RawCatom& raw, std::set<std::string>& names) {
    names.insert(raw.names.begin(), raw.names.end());
    for (const auto& subset : raw.subsets) names.insert(subset.begin(), subset.end());
}

ChoiceAtom lower_catom(const RawCatom& raw, const SignaturePtr& sig) {
    switch (raw.kind) {
        case RawCatom::Kind::Atom:
            return ChoiceAtom::literal(sig, sig->require(raw.names.front()), true);
        case RawCatom::Kind::NotAtom:
            return ChoiceAtom::literal(sig, sig->require(raw.names.front()), false);
        case RawCatom::Kind::Card:
            return ChoiceAtom::cardinality(AtomSet::of(sig, raw.names), raw.lo, raw.hi);
        case RawCatom::Kind::Count: {
            AtomSet dom = AtomSet::of(sig, raw.names);
            return raw.neq ? ChoiceAtom::count_neq(dom, raw.k)
                           : ChoiceAtom::count_eq(dom, raw.k);
        }
        case RawCatom::Kind::Explicit: {
            AtomSet dom = AtomSet::of(sig, raw.names);
            std::vector<AtomSet> satisfiers;
            for (const auto& subset : raw.subsets)
                satisfiers.push_back(AtomSet::of(sig, subset));
            return ChoiceAtom::extensional(dom, satisfiers);
        }
    }
    throw SemanticError("unreachable choice-atom kind");
}

bool literal_raw(const RawCatom& raw) {
    return raw.kind == RawCatom::Kind::Atom || raw.kind == RawCatom::Kind::NotAtom;
}

} // namespace

ParsedProgram parse_program(const std::string& text, const Limits& limits) {
    (void)limits;
    Parser parser(text);
    std::vector<RawRule> raw_rules = parser.rules();

    std::set<std::string> names;
    bool disjunctive = false;
    for (const auto& rule : raw_rules) {
        if (!rule.disjuncts.empty()) disjunctive = true;
        names.insert(rule.disjuncts.begin(), rule.disjuncts.end());
        if (rule.head) collect_names(*rule.head, names);
        for (const auto& catom : rule.body) collect_names(catom, names);
    }
    SignaturePtr sig =
        Signature::make(std::vector<std::string>(names.begin(), names.end()));

    if (disjunctive) {
        std::vector<DisjunctiveRule> rules;
        for (const auto& raw : raw_rules) {
            std::uint64_t head = 0, pos = 0, neg = 0;
            if (!raw.disjuncts.empty()) {
                for (const auto& name : raw.disjuncts) head |= 1ull << sig->require(name);
            } else if (raw.head && literal_raw(*raw.head) &&
                       raw.head->kind == RawCatom::Kind::Atom) {
                head |= 1ull << sig->require(raw.head->names.front());
            } else {
                throw ParseError(raw.line, raw.col,
                                 "choice-atom heads cannot be mixed with '|' heads");
            }
            for (const auto& catom : raw.body) {
                if (!literal_raw(catom))
                    throw ParseError(catom.line, catom.col,
                                     "choice atoms cannot appear in a disjunctive program");
                std::uint64_t bit = 1ull << sig->require(catom.names.front());
                (catom.kind == RawCatom::Kind::Atom ? pos : neg) |= bit;
            }
            rules.push_back(DisjunctiveRule{AtomSet(sig, head), AtomSet(sig, pos),
                                            AtomSet(sig, neg)});
        }
        return DisjunctiveProgram(sig, std::move(rules));
    }

    std::vector<ChoiceRule> rules;
    for (const auto& raw : raw_rules) {
        std::vector<ChoiceAtom> body;
        for (const auto& catom : raw.body) body.push_back(lower_catom(catom, sig));
        rules.push_back(ChoiceRule{lower_catom(*raw.head, sig), std::move(body)});
    }
    return ChoiceProgram(sig, std::move(rules));
}

std::string print_program(const ChoiceProgram& p) { return p.to_string(); }
std::string print_program(const DisjunctiveProgram& p) { return p.to_string(); }
std::string print_program(const ParsedProgram& p) {
    return std::visit([](const auto& program) { return program.to_string(); }, p);
}

AtomSet parse_atom_list(const SignaturePtr& sig, const std::string& text) {
    std::uint64_t bits = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool expect_atom = false;
    while (i < text.size() || expect_atom) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start)
            throw ParseError(1, static_cast<int>(i) + 1, "expected an atom name",
                             i < text.size() ? std::string(1, text[i]) : "");
        bits |= 1ull << sig->require(text.substr(start, i - start));
        skip_ws();
        expect_atom = false;
        if (i < text.size()) {
            if (text[i] != ',')
                throw ParseError(1, static_cast<int>(i) + 1, "expected ','",
                                 std::string(1, text[i]));
            ++i;
            expect_atom = true;
        }
    }
    return AtomSet(sig, bits);
}

Pair parse_pair(const SignaturePtr& sig, const std::string& text) {
    std::size_t split = text.find(';');
    if (split == std::string::npos)
        throw ParseError(1, static_cast<int>(text.size()) + 1,
                         "expected 'lower;upper' with a ';' separator");
    if (text.find(';', split + 1) != std::string::npos)
        throw ParseError(1, static_cast<int>(split) + 2, "expected a single ';' separator");
    return Pair{parse_atom_list(sig, text.substr(0, split)),
                parse_atom_list(sig, text.substr(split + 1))};
}

} // namespace choral
