#ifndef CHORAL_TESTS_SUPPORT_HPP
#define CHORAL_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "choral/groundedness.hpp"
#include "choral/oracles.hpp"
#include "choral/parser.hpp"

namespace choral::test {

inline SignaturePtr sig(std::vector<std::string> names) {
    return Signature::make(std::move(names));
}

inline AtomSet set(const SignaturePtr& s, const std::string& atoms) {
    return parse_atom_list(s, atoms);
}

inline Pair pr(const SignaturePtr& s, const std::string& text) {
    return parse_pair(s, text);
}

inline ChoiceProgram parse_choice(const std::string& text) {
    return std::get<ChoiceProgram>(parse_program(text));
}

inline DisjunctiveProgram parse_dlp(const std::string& text) {
    return std::get<DisjunctiveProgram>(parse_program(text));
}

inline AtomSetFamily family(const SignaturePtr& s, const std::vector<std::string>& members) {
    std::vector<std::uint64_t> masks;
    for (const auto& m : members) masks.push_back(parse_atom_list(s, m).bits());
    return AtomSetFamily(s, std::move(masks));
}

inline std::vector<AtomSet> all_sets(const SignaturePtr& s) {
    std::vector<AtomSet> out;
    for (std::uint64_t m = 0;; ++m) {
        out.emplace_back(s, m);
        if (m == s->universe_mask()) break;
    }
    return out;
}

/// Every pair of subsets, inconsistent ones included.
inline std::vector<Pair> all_pairs(const SignaturePtr& s) {
    std::vector<Pair> out;
    for (const auto& x : all_sets(s))
        for (const auto& y : all_sets(s)) out.push_back(Pair{x, y});
    return out;
}

inline std::vector<Pair> consistent_pairs(const SignaturePtr& s) {
    std::vector<Pair> out;
    for (const auto& p : all_pairs(s))
        if (p.consistent()) out.push_back(p);
    return out;
}

// --- randomized inputs (fixed seeds; every test run sees the same data) ---

inline std::uint64_t random_mask(std::mt19937& rng, std::uint64_t universe) {
    return rng() & universe;
}

inline std::uint64_t random_nonempty_mask(std::mt19937& rng, std::uint64_t universe) {
    std::uint64_t m = 0;
    while (m == 0) m = random_mask(rng, universe);
    return m;
}

inline ChoiceAtom random_literal(const SignaturePtr& s, std::mt19937& rng) {
    int id = static_cast<int>(rng() % s->size());
    return ChoiceAtom::literal(s, id, rng() % 2 == 0);
}

inline ChoiceAtom random_atom(const SignaturePtr& s, std::mt19937& rng) {
    AtomSet dom(s, random_nonempty_mask(rng, s->universe_mask()));
    unsigned n = static_cast<unsigned>(dom.count());
    switch (rng() % 5) {
        case 0: return random_literal(s, rng);
        case 1: {
            unsigned lo = rng() % (n + 1);
            std::optional<unsigned> hi;
            if (rng() % 2 == 0) hi = lo + rng() % (n - lo + 1);
            return ChoiceAtom::cardinality(dom, lo, hi);
        }
        case 2: return ChoiceAtom::count_eq(dom, rng() % (n + 1));
        case 3: return ChoiceAtom::count_neq(dom, rng() % (n + 1));
        default: {
            std::vector<std::uint64_t> sats;
            for_each_submask(dom.bits(), [&](std::uint64_t z) {
                if (rng() % 2 == 0) sats.push_back(z);
            });
            if (sats.empty()) sats.push_back(dom.bits());
            return ChoiceAtom::extensional_masks(dom, std::move(sats));
        }
    }
}

inline ChoiceProgram random_program(const SignaturePtr& s, std::mt19937& rng,
                                    std::size_t max_rules = 4, std::size_t max_body = 2) {
    std::vector<ChoiceRule> rules;
    std::size_t n = 1 + rng() % max_rules;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ChoiceAtom> body;
        std::size_t b = rng() % (max_body + 1);
        for (std::size_t j = 0; j < b; ++j) body.push_back(random_atom(s, rng));
        rules.push_back(ChoiceRule{random_atom(s, rng), std::move(body)});
    }
    return ChoiceProgram(s, std::move(rules));
}

/// Bodies are literals; heads stay arbitrary choice atoms.
inline ChoiceProgram random_normal_program(const SignaturePtr& s, std::mt19937& rng,
                                           std::size_t max_rules = 4,
                                           std::size_t max_body = 2) {
    std::vector<ChoiceRule> rules;
    std::size_t n = 1 + rng() % max_rules;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ChoiceAtom> body;
        std::size_t b = rng() % (max_body + 1);
        for (std::size_t j = 0; j < b; ++j) body.push_back(random_literal(s, rng));
        rules.push_back(ChoiceRule{random_atom(s, rng), std::move(body)});
    }
    return ChoiceProgram(s, std::move(rules));
}

/// Atom heads, literal bodies, no atom both positive and negative in one body.
inline ChoiceProgram random_normal_logic_program(const SignaturePtr& s, std::mt19937& rng,
                                                 std::size_t max_rules = 4,
                                                 std::size_t max_body = 2) {
    std::vector<ChoiceRule> rules;
    std::size_t n = 1 + rng() % max_rules;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ChoiceAtom> body;
        std::uint64_t used = 0;
        std::size_t b = rng() % (max_body + 1);
        for (std::size_t j = 0; j < b; ++j) {
            int id = static_cast<int>(rng() % s->size());
            if (used & (1ull << id)) continue;
            used |= 1ull << id;
            body.push_back(ChoiceAtom::literal(s, id, rng() % 2 == 0));
        }
        int head = static_cast<int>(rng() % s->size());
        rules.push_back(ChoiceRule{ChoiceAtom::literal(s, head, true), std::move(body)});
    }
    return ChoiceProgram(s, std::move(rules));
}

inline DisjunctiveProgram random_dlp(const SignaturePtr& s, std::mt19937& rng,
                                     std::size_t max_rules = 4) {
    std::vector<DisjunctiveRule> rules;
    std::uint64_t universe = s->universe_mask();
    std::size_t n = 1 + rng() % max_rules;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t head = random_nonempty_mask(rng, universe);
        std::uint64_t pos = random_mask(rng, universe);
        std::uint64_t neg = random_mask(rng, universe) & ~pos;
        rules.push_back(DisjunctiveRule{AtomSet(s, head), AtomSet(s, pos), AtomSet(s, neg)});
    }
    return DisjunctiveProgram(s, std::move(rules));
}

/// True when the immediate consequence of every subset is non-empty, i.e.
/// the program never hits an assumption violation on any input.
inline bool assumption_ok(const ChoiceProgram& p) {
    for (const auto& x : all_sets(p.signature()))
        if (ic_unchecked(p, x).empty()) return false;
    return true;
}

inline AtomSetFamily random_family(const SignaturePtr& s, std::mt19937& rng) {
    std::vector<std::uint64_t> masks;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) masks.push_back(random_mask(rng, s->universe_mask()));
    return AtomSetFamily(s, std::move(masks));
}

} // namespace choral::test

#endif
