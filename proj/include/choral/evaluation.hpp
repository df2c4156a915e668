#ifndef CHORAL_EVALUATION_HPP
#define CHORAL_EVALUATION_HPP

#include <vector>

#include "choral/four_value.hpp"
#include "choral/program.hpp"

namespace choral {

/// Two-valued satisfaction of a choice atom: x ∩ dom ∈ sat.
inline bool satisfies(const AtomSet& x, const ChoiceAtom& atom) {
    return atom.satisfied_by(x);
}

/// Four-valued evaluation of a choice atom at a pair, from the
/// satisfaction status of the two bounds. Accepts inconsistent pairs.
FourValue eval4(const Pair& pair, const ChoiceAtom& atom);

/// Four-valued atom evaluation: T if in both bounds, U if only in the
/// upper, C if only in the lower, F if in neither.
FourValue eval4_atom(const Pair& pair, int atom_id);

/// Truth-order meet of the body literals of a disjunctive rule;
/// the empty body evaluates to T.
FourValue eval_formula4(const Pair& pair, const DisjunctiveRule& rule);

/// x satisfies every rule: head satisfied or some body atom unsatisfied.
bool is_model(const AtomSet& x, const ChoiceProgram& p);

/// Model with every atom covered by the head domain of an applicable rule.
bool is_supported_model(const AtomSet& x, const ChoiceProgram& p);

/// Three-valued model of a normal choice program: for every rule the
/// body meet is ≤_t the head value. Requires a consistent pair.
bool is_3v_model(const Pair& pair, const ChoiceProgram& p,
                 const Limits& limits = default_limits());

/// Three-valued (weakly) supported model: a model where every non-false
/// atom p has a rule with p in the head domain whose body meet is
/// ≥_t the value of p.
bool is_3v_supported(const Pair& pair, const ChoiceProgram& p,
                     const Limits& limits = default_limits());

} // namespace choral

#endif
