#ifndef CHORAL_CHOICE_ATOM_HPP
#define CHORAL_CHOICE_ATOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "choral/atom_set.hpp"

namespace choral {

/// How the satisfier family of a choice atom is represented. The
/// intensional forms evaluate in O(|dom|) without materializing the
/// satisfier family; Extensional is the ground truth used by the
/// classification checks and oracle tests.
enum class SatKind {
    Extensional,  // explicit list of satisfier subsets of dom
    Cardinality,  // lo ≤ |z ∩ dom| ≤ hi (hi may be unbounded)
    CountEq,      // |z ∩ dom| = k
    CountNeq,     // |z ∩ dom| ≠ k
    PosLiteral,   // dom = {a}, satisfied iff a present
    NegLiteral,   // dom = {a}, satisfied iff a absent
};

/// A choice atom (dom, sat): dom names the atoms relevant for
/// evaluation, sat the subsets of dom that satisfy it. A set x
/// satisfies the atom iff x ∩ dom ∈ sat.
class ChoiceAtom {
public:
    static ChoiceAtom cardinality(AtomSet dom, unsigned lo, std::optional<unsigned> hi);
    static ChoiceAtom count_eq(AtomSet dom, unsigned k);
    static ChoiceAtom count_neq(AtomSet dom, unsigned k);
    static ChoiceAtom literal(const SignaturePtr& sig, int atom_id, bool positive);
    /// Satisfiers must be subsets of dom; deduplicated and canonicalized.
    static ChoiceAtom extensional(AtomSet dom, const std::vector<AtomSet>& satisfiers);
    static ChoiceAtom extensional_masks(AtomSet dom, std::vector<std::uint64_t> sat_masks);

    SatKind kind() const { return kind_; }
    const AtomSet& dom() const { return dom_; }
    const SignaturePtr& signature() const { return dom_.signature(); }

    unsigned lo() const { return lo_; }
    std::optional<unsigned> hi() const { return hi_; }
    unsigned k() const { return k_; }
    /// Satisfier masks (global bit positions), numerically sorted.
    /// Only meaningful for Extensional atoms.
    const std::vector<std::uint64_t>& sat_masks() const { return sat_; }

    /// Membership of x ∩ dom in sat.
    bool satisfied_by(const AtomSet& x) const { return satisfied_by_mask(x.bits()); }
    bool satisfied_by_mask(std::uint64_t x_bits) const;

    /// Equivalent Extensional form, enumerating the subsets of dom.
    ChoiceAtom extensionalize(const Limits& limits = default_limits()) const;

    /// Structural equality (same representation, not just same behavior).
    friend bool operator==(const ChoiceAtom& a, const ChoiceAtom& b);
    friend bool operator!=(const ChoiceAtom& a, const ChoiceAtom& b) { return !(a == b); }

    std::string to_string() const;

private:
    ChoiceAtom(AtomSet dom, SatKind kind) : dom_(std::move(dom)), kind_(kind) {}

    AtomSet dom_;
    SatKind kind_;
    unsigned lo_ = 0;
    std::optional<unsigned> hi_;
    unsigned k_ = 0;
    std::vector<std::uint64_t> sat_;
};

/// sat is upward closed within ℘(dom). Decided over subsets of dom,
/// which is equivalent to the signature-relative definition because
/// satisfaction only reads x ∩ dom.
bool is_monotone(const ChoiceAtom& atom, const Limits& limits = default_limits());

/// sat is interval closed within ℘(dom).
bool is_convex(const ChoiceAtom& atom, const Limits& limits = default_limits());

/// If the atom behaves extensionally like a literal on some atom of its
/// domain, returns (atom_id, positive). Covers the PosLiteral/NegLiteral
/// forms and any other representation that is extensionally equal to one.
std::optional<std::pair<int, bool>> literal_shape(const ChoiceAtom& atom,
                                                  const Limits& limits = default_limits());

/// True iff the atom is exactly an atom: dom = {a} with sat = {{a}}.
std::optional<int> atom_shape(const ChoiceAtom& atom);

} // namespace choral

#endif
