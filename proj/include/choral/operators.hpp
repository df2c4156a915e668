#ifndef CHORAL_OPERATORS_HPP
#define CHORAL_OPERATORS_HPP

#include <string>
#include <vector>

#include "choral/evaluation.hpp"
#include "choral/family.hpp"

namespace choral {

enum class OperatorKind { GZ, LPST, MR, ULT };

const char* to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& name);
inline const std::vector<OperatorKind>& all_operator_kinds() {
    static const std::vector<OperatorKind> kinds{OperatorKind::GZ, OperatorKind::LPST,
                                                 OperatorKind::MR, OperatorKind::ULT};
    return kinds;
}

/// Both bounds of an operator application; non-empty by construction
/// (an empty bound raises AssumptionViolation instead).
struct NdaoOutput {
    AtomSetFamily lower;
    AtomSetFamily upper;
};

/// Rules whose every body atom is satisfied by x.
std::vector<const ChoiceRule*> applicable(const ChoiceProgram& p, const AtomSet& x);

/// The immediate consequence operator: all z within the union of
/// applicable head domains that satisfy every applicable head.
/// May return the empty family; ic() raises AssumptionViolation instead.
AtomSetFamily ic_unchecked(const ChoiceProgram& p, const AtomSet& x,
                           const Limits& limits = default_limits());
AtomSetFamily ic(const ChoiceProgram& p, const AtomSet& x,
                 const Limits& limits = default_limits());

/// The lower-bound head set of GZ, LPST or MR (ULT has no head-set form).
std::vector<const ChoiceRule*> hd_lower(OperatorKind kind, const ChoiceProgram& p,
                                        const Pair& pair,
                                        const Limits& limits = default_limits());

/// Lower/upper bounds of the four approximation operators. The
/// _unchecked variants evaluate the defining formulas on any pair and
/// may return empty families (the interval-based bounds are empty at
/// inconsistent pairs); the checked variants enforce the GZ consistency
/// restriction and raise AssumptionViolation on empty results.
AtomSetFamily ic_lower_unchecked(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                                 const Limits& limits = default_limits());
AtomSetFamily ic_upper_unchecked(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                                 const Limits& limits = default_limits());
AtomSetFamily ic_lower(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                       const Limits& limits = default_limits());
AtomSetFamily ic_upper(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                       const Limits& limits = default_limits());

NdaoOutput apply_ndao(OperatorKind kind, const ChoiceProgram& p, const Pair& pair,
                      const Limits& limits = default_limits());

/// Replaces each disjunctive head Δ by the choice atom "at least one of
/// Δ"; bodies become literal choice atoms, otherwise unchanged.
ChoiceProgram d2c(const DisjunctiveProgram& d);

///// The operator for disjunctive programs. Lower bound: hitting sets of
/// the heads whose body evaluates ≥_t C. Upper bound: union over
/// z ∈ [x, y] of the hitting sets of the heads fired at z, so it agrees
/// with the interval-based operators on the translated program. The
/// upper family is empty when x ⊄ y.
NdaoOutput ic_d(const DisjunctiveProgram& d, const Pair& pair,
                const Limits& limits = default_limits());

} // namespace choral

#endif
