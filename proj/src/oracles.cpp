#include "choral/oracles.hpp"

#include <algorithm>

namespace choral::oracles {

namespace {

void require_sweep_cap(const SignaturePtr& sig, const Limits& limits) {
    if (sig->size() > limits.max_sweep_atoms)
        throw CapError("exhaustive sweep over " + std::to_string(sig->size()) +
                       " atoms exceeds the cap of " + std::to_string(limits.max_sweep_atoms));
}

/// Positive/negative atom masks of a rule whose body is made of literals.
struct LiteralBody {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};

LiteralBody literal_body(const ChoiceRule& rule, const Limits& limits) {
    LiteralBody out;
    for (const auto& atom : rule.body) {
        auto shape = literal_shape(atom, limits);
        if (!shape) throw SemanticError("rule body is not made of literals");
        (shape->second ? out.pos : out.neg) |= 1ull << shape->first;
    }
    return out;
}

int head_atom(const ChoiceRule& rule) {
    auto id = atom_shape(rule.head);
    if (!id) throw SemanticError("rule head is not an atom");
    return *id;
}

/// Least model of a definite rule set by one-step iteration.
std::uint64_t least_model(const std::vector<std::pair<int, std::uint64_t>>& rules) {
    std::uint64_t s = 0;
    while (true) {
        std::uint64_t next = s;
        for (const auto& [head, pos] : rules)
            if ((pos & ~s) == 0) next |= 1ull << head;
        if (next == s) return s;
        s = next;
    }
}

/// Γ_P(y): least model of the Gelfond–Lifschitz reduct of P by y.
std::uint64_t gl_gamma(const ChoiceProgram& p, std::uint64_t y, const Limits& limits) {
    std::vector<std::pair<int, std::uint64_t>> reduct;
    for (const auto& rule : p.rules()) {
        LiteralBody body = literal_body(rule, limits);
        if (body.neg & y) continue;
        reduct.emplace_back(head_atom(rule), body.pos);
    }
    return least_model(reduct);
}

} // namespace

NssProgram nss_build(const ChoiceProgram& p, const AtomSet& y, const Limits& limits) {
    NssProgram out{p.signature(), {}};
    for (const auto& rule : p.rules()) {
        bool dropped = false;
        for (const auto& atom : rule.body)
            if (!atom.satisfied_by(y)) { dropped = true; break; }
        if (dropped) continue;
        // Bar each surviving body atom: C̄ accepts exactly the sets whose
        // dom(C)-part extends some satisfier of C that fits under y.
        std::vector<ChoiceAtom> barred;
        for (const auto& atom : rule.body) {
            ChoiceAtom ext = atom.extensionalize(limits);
            std::uint64_t cap = y.bits() & ext.dom().bits();
            std::vector<std::uint64_t> satisfiers;
            for (std::uint64_t z : ext.sat_masks()) {
                if (z & ~y.bits()) continue;
                for_each_submask(cap & ~z, [&](std::uint64_t extra) {
                    satisfiers.push_back(z | extra);
                });
            }
            barred.push_back(ChoiceAtom::extensional_masks(ext.dom(), std::move(satisfiers)));
        }
        std::uint64_t heads = rule.head.dom().bits() & y.bits();
        for (std::uint64_t rest = heads; rest; rest &= rest - 1)
            out.rules.push_back(NssRule{std::countr_zero(rest), barred});
    }
    return out;
}

AtomSet nss_least_model(const ChoiceProgram& p, const AtomSet& y, const Limits& limits) {
    NssProgram nss = nss_build(p, y, limits);
    std::uint64_t s = 0;
    while (true) {
        std::uint64_t next = s;
        for (const auto& rule : nss.rules) {
            bool body_sat = true;
            for (const auto& atom : rule.body)
                if (!atom.satisfied_by_mask(s)) { body_sat = false; break; }
            if (body_sat) next |= 1ull << rule.head;
        }
        if (next == s) break;
        s = next;
    }
    return AtomSet(p.signature(), s);
}

std::vector<AtomSet> mr_stable_via_nss(const ChoiceProgram& p, const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    std::vector<AtomSet> out;
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t y = 0;; ++y) {
        AtomSet candidate(sig, y);
        if (is_model(candidate, p) && nss_least_model(p, candidate, limits) == candidate)
            out.push_back(candidate);
        if (y == universe) break;
    }
    return out;
}

AtomSet gl_gamma(const ChoiceProgram& p, const AtomSet& y, const Limits& limits) {
    if (!is_normal_logic(p, limits))
        throw SemanticError("the reduct is defined for normal logic programs only");
    return AtomSet(p.signature(), gl_gamma(p, y.bits(), limits));
}

std::vector<AtomSet> gl_stable_models(const ChoiceProgram& p, const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    if (!is_normal_logic(p, limits))
        throw SemanticError("stable models are defined for normal logic programs only");
    std::vector<AtomSet> out;
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t y = 0;; ++y) {
        if (gl_gamma(p, y, limits) == y) out.emplace_back(sig, y);
        if (y == universe) break;
    }
    return out;
}

std::vector<Pair> gl_partial_stable(const ChoiceProgram& p, const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    if (!is_normal_logic(p, limits))
        throw SemanticError("partial stable models are defined for normal logic programs only");
    std::vector<Pair> out;
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t y = 0;; ++y) {
        std::uint64_t x = gl_gamma(p, y, limits);
        if ((x & ~y) == 0 && gl_gamma(p, x, limits) == y)
            out.push_back(Pair{AtomSet(sig, x), AtomSet(sig, y)});
        if (y == universe) break;
    }
    std::sort(out.begin(), out.end(), [](const Pair& a, const Pair& b) {
        if (a.lower != b.lower) return canonical_less(a.lower, b.lower);
        return canonical_less(a.upper, b.upper);
    });
    return out;
}

std::vector<const ChoiceRule*> naive_lpst_hd(const ChoiceProgram& p, const Pair& pair,
                                             const Limits& limits) {
    std::vector<const ChoiceRule*> out;
    for (const auto& rule : p.rules()) {
        bool in_hd = true;
        for (const auto& atom : rule.body) {
            bool holds = true;
            // Deliberately the full interval [x, y], no localization.
            for_each_in_interval(pair.lower, pair.upper, [&](std::uint64_t z) {
                if (!atom.satisfied_by_mask(z)) holds = false;
            }, limits);
            if (!holds) { in_hd = false; break; }
        }
        if (in_hd) out.push_back(&rule);
    }
    return out;
}

Pair fitting_step(const ChoiceProgram& p, const Pair& pair, const Limits& limits) {
    if (!is_normal_logic(p, limits))
        throw SemanticError("the fitting operator is defined for normal logic programs only");
    std::uint64_t lower = 0, upper = 0;
    for (const auto& rule : p.rules()) {
        LiteralBody body = literal_body(rule, limits);
        std::uint64_t head = 1ull << head_atom(rule);
        if ((body.pos & ~pair.lower.bits()) == 0 && (body.neg & pair.upper.bits()) == 0)
            lower |= head;
        if ((body.pos & ~pair.upper.bits()) == 0 && (body.neg & pair.lower.bits()) == 0)
            upper |= head;
    }
    return Pair{pair.lower.with_bits(lower), pair.upper.with_bits(upper)};
}

} // namespace choral::oracles
