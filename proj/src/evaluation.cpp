#include "choral/evaluation.hpp"

namespace choral {

namespace {

FourValue from_bounds(bool lower_sat, bool upper_sat) {
    if (lower_sat && upper_sat) return FourValue::T;
    if (lower_sat) return FourValue::C;
    if (upper_sat) return FourValue::U;
    return FourValue::F;
}

/// ≤_t-meet of a literal body, literals via the atom case + involution.
FourValue body_meet4(const Pair& pair, const ChoiceRule& rule, const Limits& limits) {
    FourValue value = FourValue::T;
    for (const auto& atom : rule.body) {
        auto shape = literal_shape(atom, limits);
        if (!shape) throw SemanticError("rule body is not made of literals");
        FourValue v = eval4_atom(pair, shape->first);
        value = meet_t(value, shape->second ? v : negate4(v));
    }
    return value;
}

} // namespace

FourValue eval4(const Pair& pair, const ChoiceAtom& atom) {
    // Negative literals evaluate through the involution: ¬q is undecided
    // (not contradictory) when q is undecided. The bound-wise cases below
    // apply to every other choice atom.
    if (atom.kind() == SatKind::NegLiteral)
        return negate4(eval4_atom(pair, atom.dom().ids().front()));
    return from_bounds(atom.satisfied_by(pair.lower), atom.satisfied_by(pair.upper));
}

FourValue eval4_atom(const Pair& pair, int atom_id) {
    return from_bounds(pair.lower.contains(atom_id), pair.upper.contains(atom_id));
}

FourValue eval_formula4(const Pair& pair, const DisjunctiveRule& rule) {
    FourValue value = FourValue::T;
    for (int id : rule.pos.ids()) value = meet_t(value, eval4_atom(pair, id));
    for (int id : rule.neg.ids()) value = meet_t(value, negate4(eval4_atom(pair, id)));
    return value;
}

bool is_model(const AtomSet& x, const ChoiceProgram& p) {
    for (const auto& rule : p.rules()) {
        bool body_sat = true;
        for (const auto& atom : rule.body)
            if (!atom.satisfied_by(x)) { body_sat = false; break; }
        if (body_sat && !rule.head.satisfied_by(x)) return false;
    }
    return true;
}

bool is_supported_model(const AtomSet& x, const ChoiceProgram& p) {
    if (!is_model(x, p)) return false;
    std::uint64_t covered = 0;
    for (const auto& rule : p.rules()) {
        bool body_sat = true;
        for (const auto& atom : rule.body)
            if (!atom.satisfied_by(x)) { body_sat = false; break; }
        if (body_sat) covered |= rule.head.dom().bits();
    }
    return (x.bits() & ~covered) == 0;
}

bool is_3v_model(const Pair& pair, const ChoiceProgram& p, const Limits& limits) {
    if (!pair.consistent())
        throw SemanticError("three-valued model check needs a consistent pair");
    if (!is_normal(p, limits))
        throw SemanticError("three-valued model check needs a normal program");
    for (const auto& rule : p.rules()) {
        // Heads follow the four bound-wise cases even for negative
        // literals, matching the satisfaction-based reading of heads.
        FourValue head = from_bounds(rule.head.satisfied_by(pair.lower),
                                     rule.head.satisfied_by(pair.upper));
        if (!leq_t(body_meet4(pair, rule, limits), head)) return false;
    }
    return true;
}

bool is_3v_supported(const Pair& pair, const ChoiceProgram& p, const Limits& limits) {
    if (!is_3v_model(pair, p, limits)) return false;
    for (int id : pair.upper.ids()) {
        FourValue value = eval4_atom(pair, id);
        bool witnessed = false;
        for (const auto& rule : p.rules()) {
            if (!rule.head.dom().contains(id)) continue;
            if (leq_t(value, body_meet4(pair, rule, limits))) { witnessed = true; break; }
        }
        if (!witnessed) return false;
    }
    return true;
}

} // namespace choral
