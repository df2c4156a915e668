#ifndef CHORAL_ORACLES_HPP
#define CHORAL_ORACLES_HPP

#include <vector>

#include "choral/evaluation.hpp"

// Independent reference implementations used only for differential
// testing. Nothing here may call into the operator or semantics layers;
// shared vocabulary is restricted to the lattice/syntax value types.

namespace choral::oracles {

/// An atom-headed rule of the reduct program NSS(P, y); bodies are the
/// derived extensional atoms C̄.
struct NssRule {
    int head;
    std::vector<ChoiceAtom> body;
};

struct NssProgram {
    SignaturePtr sig;
    std::vector<NssRule> rules;
};

/// The two-step construction: drop rules with a body atom false under y,
/// then split each surviving rule into α ← C̄_1,…,C̄_n for every atom α
/// of dom(head) ∩ y, where C̄ has satisfiers {w ∩ dom(C) : z ⊆ w ⊆ y,
/// z ∈ sat(C), z ⊆ y}.
NssProgram nss_build(const ChoiceProgram& p, const AtomSet& y,
                     const Limits& limits = default_limits());

/// Least model of NSS(P, y) by one-step-provability iteration from ∅.
AtomSet nss_least_model(const ChoiceProgram& p, const AtomSet& y,
                        const Limits& limits = default_limits());

/// Models y of P with y = nss_least_model(P, y).
std::vector<AtomSet> mr_stable_via_nss(const ChoiceProgram& p,
                                       const Limits& limits = default_limits());

/// Γ_P(y): least model of the Gelfond–Lifschitz reduct of P by y;
/// normal logic programs only.
AtomSet gl_gamma(const ChoiceProgram& p, const AtomSet& y,
                 const Limits& limits = default_limits());

/// Textbook reduct-based stable models; normal logic programs only.
std::vector<AtomSet> gl_stable_models(const ChoiceProgram& p,
                                      const Limits& limits = default_limits());

/// Consistent pairs (x, y) with x = Γ_P(y) and y = Γ_P(x), where Γ is
/// the least model of the reduct.
std::vector<Pair> gl_partial_stable(const ChoiceProgram& p,
                                    const Limits& limits = default_limits());

/// The LPST lower head set decided by literal full-interval enumeration.
std::vector<const ChoiceRule*> naive_lpst_hd(const ChoiceProgram& p, const Pair& pair,
                                             const Limits& limits = default_limits());

/// One step of the standard three-valued (Fitting) operator for normal
/// logic programs: an atom is true when some rule body is true, not
/// false when some rule body is not false.
Pair fitting_step(const ChoiceProgram& p, const Pair& pair,
                  const Limits& limits = default_limits());

} // namespace choral::oracles

#endif
