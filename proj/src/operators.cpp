#include "choral/operators.hpp"

#include <algorithm>

namespace choral {

const char* to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::GZ: return "gz";
        case OperatorKind::LPST: return "lpst";
        case OperatorKind::MR: return "mr";
        case OperatorKind::ULT: return "ult";
    }
    return "?";
}

OperatorKind operator_kind_from_string(const std::string& name) {
    if (name == "gz") return OperatorKind::GZ;
    if (name == "lpst") return OperatorKind::LPST;
    if (name == "mr") return OperatorKind::MR;
    if (name == "ult" || name == "ultimate") return OperatorKind::ULT;
    throw SemanticError("unknown operator '" + name + "' (expected gz|lpst|mr|ult)");
}

std::vector<const ChoiceRule*> applicable(const ChoiceProgram& p, const AtomSet& x) {
    std::vector<const ChoiceRule*> out;
    for (const auto& rule : p.rules()) {
        bool body_sat = true;
        for (const auto& atom : rule.body)
            if (!atom.satisfied_by(x)) { body_sat = false; break; }
        if (body_sat) out.push_back(&rule);
    }
    return out;
}

namespace {

void require_head_cap(std::uint64_t dom_union, const Limits& limits) {
    std::size_t n = static_cast<std::size_t>(std::popcount(dom_union));
    if (n > limits.max_dom_atoms)
        throw CapError("head-domain union of " + std::to_string(n) +
                       " atoms exceeds the cap of " + std::to_string(limits.max_dom_atoms));
}

/// {z ⊆ ⋃dom(head(r)) : z satisfies every head}, for any rule selection.
AtomSetFamily family_from_heads(const SignaturePtr& sig,
                                const std::vector<const ChoiceRule*>& rules,
                                const Limits& limits) {
    std::uint64_t dom_union = 0;
    for (const ChoiceRule* rule : rules) dom_union |= rule->head.dom().bits();
    require_head_cap(dom_union, limits);
    AtomSetFamily out(sig);
    for_each_submask(dom_union, [&](std::uint64_t z) {
        for (const ChoiceRule* rule : rules)
            if (!rule->head.satisfied_by_mask(z)) return;
        out.insert_mask(z);
    });
    return out;
}

bool lpst_body_atom_holds(const ChoiceAtom& atom, const Pair& pair, const Limits& limits) {
    // z(C) only reads z ∩ dom(C), so the interval quantifier localizes
    // to [x ∩ dom(C), y ∩ dom(C)].
    AtomSet lo = pair.lower & atom.dom();
    AtomSet hi = pair.upper & atom.dom();
    bool holds = true;
    for_each_in_interval(lo, hi, [&](std::uint64_t z) {
        if (!atom.satisfied_by_mask(z)) holds = false;
    }, limits);
    return holds;
}

bool mr_rule_in_hd(const ChoiceRule& rule, const Pair& pair, const Limits& limits) {
    std::uint64_t body_union = 0;
    bool disjoint = true;
    for (const auto& atom : rule.body) {
        if (!atom.satisfied_by(pair.upper)) return false;
        if (body_union & atom.dom().bits()) disjoint = false;
        body_union |= atom.dom().bits();
    }
    if (rule.body.empty()) return true;
    if (disjoint) {
        // ∃z ⊆ x with z(C_i) = T for all i splits per body atom.
        for (const auto& atom : rule.body) {
            std::uint64_t local = pair.lower.bits() & atom.dom().bits();
            bool found = false;
            for_each_submask(local, [&](std::uint64_t w) {
                if (atom.satisfied_by_mask(w)) found = true;
            });
            if (!found) return false;
        }
        return true;
    }
    std::uint64_t local = pair.lower.bits() & body_union;
    if (static_cast<std::size_t>(std::popcount(local)) > limits.max_dom_atoms)
        throw CapError("joint trigger search over " +
                       std::to_string(std::popcount(local)) +
                       " atoms exceeds the cap of " + std::to_string(limits.max_dom_atoms));
    bool found = false;
    for_each_submask(local, [&](std::uint64_t z) {
        if (found) return;
        for (const auto& atom : rule.body)
            if (!atom.satisfied_by_mask(z)) return;
        found = true;
    });
    return found;
}

} // namespace

AtomSetFamily ic_unchecked(const ChoiceProgram& p, const AtomSet& x, const Limits& limits) {
    return family_from_heads(p.signature(), applicable(p, x), limits);
}

AtomSetFamily ic(const ChoiceProgram& p, const AtomSet& x, const Limits& limits) {
    AtomSetFamily out = ic_unchecked(p, x, limits);
    if (out.empty())
        throw AssumptionViolation("immediate-consequence operator is empty at " +
                                  x.to_string());
    return out;
}

std::vector<const ChoiceRule*> hd_lower(OperatorKind kind, const ChoiceProgram& p,
                                        const Pair& pair, const Limits& limits) {
    if (kind == OperatorKind::ULT)
        throw SemanticError("the ultimate operator has no head-set form");
    std::vector<const ChoiceRule*> out;
    for (const auto& rule : p.rules()) {
        bool in_hd = true;
        switch (kind) {
            case OperatorKind::GZ:
                for (const auto& atom : rule.body) {
                    std::uint64_t dom = atom.dom().bits();
                    if (((pair.lower.bits() ^ pair.upper.bits()) & dom) != 0 ||
                        !atom.satisfied_by(pair.lower)) {
                        in_hd = false;
                        break;
                    }
                }
                break;
            case OperatorKind::LPST:
                // When x ⊄ y the interval is empty and the quantifier is
                // vacuously true for every rule.
                if (pair.consistent()) {
                    for (const auto& atom : rule.body) {
                        if (!lpst_body_atom_holds(atom, pair, limits)) {
                            in_hd = false;
                            break;
                        }
                    }
                }
                break;
            case OperatorKind::MR:
                in_hd = mr_rule_in_hd(rule, pair, limits);
                break;
            case OperatorKind::ULT:
                break;
        }
        if (in_hd) out.push_back(&rule);
    }
    return out;
}

AtomSetFamily ic_lower_unchecked(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                                 const Limits& limits) {
    if (kind == OperatorKind::ULT) {
        AtomSetFamily out(p.signature());
        for_each_in_interval(pair.lower, pair.upper, [&](std::uint64_t z) {
            out.merge(ic_unchecked(p, pair.lower.with_bits(z), limits));
        }, limits);
        return out;
    }
    return family_from_heads(p.signature(), hd_lower(kind, p, pair, limits), limits);
}

AtomSetFamily ic_upper_unchecked(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                                 const Limits& limits) {
    if (kind == OperatorKind::GZ) return ic_lower_unchecked(kind, p, pair, limits);
    AtomSetFamily out(p.signature());
    for_each_in_interval(pair.lower, pair.upper, [&](std::uint64_t z) {
        out.merge(ic_unchecked(p, pair.lower.with_bits(z), limits));
    }, limits);
    return out;
}

namespace {

void require_non_empty(const AtomSetFamily& family, OperatorKind kind, const Pair& pair,
                       const char* bound) {
    if (family.empty())
        throw AssumptionViolation(std::string(to_string(kind)) + " " + bound +
                                  " bound is empty at " + pair.to_string());
}

void require_gz_consistent(OperatorKind kind, const Pair& pair) {
    if (kind == OperatorKind::GZ && !pair.consistent())
        throw SemanticError("the gz operator is only defined on consistent pairs");
}

} // namespace

AtomSetFamily ic_lower(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                       const Limits& limits) {
    require_gz_consistent(kind, pair);
    AtomSetFamily out = ic_lower_unchecked(kind, p, pair, limits);
    require_non_empty(out, kind, pair, "lower");
    return out;
}

AtomSetFamily ic_upper(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                       const Limits& limits) {
    require_gz_consistent(kind, pair);
    AtomSetFamily out = ic_upper_unchecked(kind, p, pair, limits);
    require_non_empty(out, kind, pair, "upper");
    return out;
}

NdaoOutput apply_ndao(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                      const Limits& limits) {
    return NdaoOutput{ic_lower(kind, p, pair, limits), ic_upper(kind, p, pair, limits)};
}

ChoiceProgram d2c(const DisjunctiveProgram& d) {
    const SignaturePtr& sig = d.signature();
    std::vector<ChoiceRule> rules;
    for (const auto& rule : d.rules()) {
        std::vector<ChoiceAtom> body;
        for (int id : rule.pos.ids()) body.push_back(ChoiceAtom::literal(sig, id, true));
        for (int id : rule.neg.ids()) body.push_back(ChoiceAtom::literal(sig, id, false));
        rules.push_back(ChoiceRule{ChoiceAtom::cardinality(rule.head, 1, std::nullopt),
                                   std::move(body)});
    }
    return ChoiceProgram(sig, std::move(rules));
}

namespace {

AtomSetFamily hitting_sets(const SignaturePtr& sig,
                           const std::vector<const DisjunctiveRule*>& rules,
                           const Limits& limits) {
    std::uint64_t dom_union = 0;
    for (const DisjunctiveRule* rule : rules) dom_union |= rule->head.bits();
    require_head_cap(dom_union, limits);
    AtomSetFamily out(sig);
    for_each_submask(dom_union, [&](std::uint64_t z) {
        for (const DisjunctiveRule* rule : rules)
            if ((z & rule->head.bits()) == 0) return;
        out.insert_mask(z);
    });
    return out;
}

} // namespace

NdaoOutput ic_d(const DisjunctiveProgram& d, const Pair& pair, const Limits& limits) {
    std::vector<const DisjunctiveRule*> hd_l;
    for (const auto& rule : d.rules()) {
        FourValue body = eval_formula4(pair, rule);
        if (body == FourValue::C || body == FourValue::T) hd_l.push_back(&rule);
    }
    // The upper bound is interval-based: a one-shot hitting-set bound
    // would force heads of merely-possible rules into every candidate,
    // losing candidates that drop such a rule at some z in [x, y].
    AtomSetFamily upper(d.signature());
    for_each_in_interval(pair.lower, pair.upper, [&](std::uint64_t z) {
        std::vector<const DisjunctiveRule*> fired;
        for (const auto& rule : d.rules())
            if ((rule.pos.bits() & ~z) == 0 && (rule.neg.bits() & z) == 0)
                fired.push_back(&rule);
        upper.merge(hitting_sets(d.signature(), fired, limits));
    }, limits);
    return NdaoOutput{hitting_sets(d.signature(), hd_l, limits), std::move(upper)};
}

} // namespace choral
