#ifndef CHORAL_SEMANTICS_HPP
#define CHORAL_SEMANTICS_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "choral/operators.hpp"

namespace choral {

/// A well-founded sequence: steps[0] = ∅, steps[i] ⊆ steps[i+1] and
/// steps[i+1] ∈ O(steps[i]) for the operator the trace was built
/// against. The last step is the terminal set.
struct WfsTrace {
    std::vector<AtomSet> steps;

    const AtomSet& terminal() const { return steps.back(); }
};

/// A non-deterministic one-argument operator over atom sets.
using NdOp = std::function<AtomSetFamily(const AtomSet&)>;

struct WfsResult {
    AtomSetFamily reachable;                   // every visited set
    std::map<std::uint64_t, WfsTrace> traces;  // shortest witness per set
};

/// Breadth-first closure from ∅ under {x' ∈ op(x) | x ⊆ x'}. The
/// limit-ordinal clause of the definition is vacuous on finite lattices.
WfsResult wfs_reach(const SignaturePtr& sig, const NdOp& op,
                    const Limits& limits = default_limits());

/// Pairs (x, y) with x ∈ O_l(x, y) and y ∈ O_u(x, y), over all
/// consistent (or total) pairs, in canonical order.
std::vector<Pair> fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                            const Limits& limits = default_limits());

/// Direct-definition enumeration; equals the total fixpoints of every kind.
std::vector<AtomSet> supported_models(const ChoiceProgram& p,
                                      const Limits& limits = default_limits());

struct CCompleteResult {
    AtomSetFamily sets;
    std::map<std::uint64_t, WfsTrace> traces;
};

/// The constructive complete bound operators: fixpoints of the frozen
/// projection O_l(·, y) (resp. O_u(x, ·)) reachable by well-founded
/// sequences. The upper search runs in the sublattice [x, A], since an
/// upper bound below x never closes back into a consistent pair.
/// GZ's upper projection is only meaningful on total pairs, so
/// c_complete_upper(GZ, …) is rejected.
CCompleteResult c_complete_lower(OperatorKind kind, const ChoiceProgram& p, const AtomSet& y,
                                 const Limits& limits = default_limits());
CCompleteResult c_complete_upper(OperatorKind kind, const ChoiceProgram& p, const AtomSet& x,
                                 const Limits& limits = default_limits());

/// Minimal variant: the ⊆-minimal fixpoints of the frozen projection.
AtomSetFamily complete_lower_stable(OperatorKind kind, const ChoiceProgram& p, const AtomSet& y,
                                    const Limits& limits = default_limits());
AtomSetFamily complete_upper_stable(OperatorKind kind, const ChoiceProgram& p, const AtomSet& x,
                                    const Limits& limits = default_limits());

enum class StableFlavor { Minimal, Constructive };
const char* to_string(StableFlavor flavor);

struct StablePair {
    Pair pair;
    std::optional<WfsTrace> lower_trace;  // constructive flavor only
    std::optional<WfsTrace> upper_trace;
};

struct StableResult {
    OperatorKind kind;
    StableFlavor flavor;
    std::vector<StablePair> pairs;  // canonical order
};

/// Minimality-based stable fixpoints: x ∈ S(O_l)(y) and y ∈ S(O_u)(x).
StableResult stable_fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                              const Limits& limits = default_limits());

/// Constructive stable fixpoints: both bounds reachable via well-founded
/// sequences. GZ is restricted to total pairs (its upper bound breaks on
/// non-total seeds), and its membership is decided on the lower
/// projection alone.
StableResult c_stable_fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                                const Limits& limits = default_limits());

/// For monotone-head programs only: all x with ic(P, x) Smyth-below {x},
/// which coincide with the classical models.
std::vector<AtomSet> prefixpoint_models(const ChoiceProgram& p,
                                        const Limits& limits = default_limits());

} // namespace choral

#endif
