#ifndef CHORAL_FAMILY_HPP
#define CHORAL_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "choral/atom_set.hpp"

namespace choral {

/// A finite family of atom sets over one signature, deduplicated and
/// kept in canonical order. The output type of the non-deterministic
/// operators; may be empty only in intermediate computations.
class AtomSetFamily {
public:
    explicit AtomSetFamily(SignaturePtr sig) : sig_(std::move(sig)) {}
    AtomSetFamily(SignaturePtr sig, std::vector<std::uint64_t> masks);

    static AtomSetFamily of(const SignaturePtr& sig, std::vector<AtomSet> sets);
    /// The family {∅}.
    static AtomSetFamily singleton_empty(const SignaturePtr& sig);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }

    bool contains(const AtomSet& x) const;
    bool contains_mask(std::uint64_t mask) const;

    void insert_mask(std::uint64_t mask);
    void merge(const AtomSetFamily& other);

    std::vector<AtomSet> sets() const;
    AtomSet set(std::size_t i) const { return AtomSet(sig_, masks_[i]); }

    friend bool operator==(const AtomSetFamily& a, const AtomSetFamily& b) {
        return a.masks_ == b.masks_;
    }
    friend bool operator!=(const AtomSetFamily& a, const AtomSetFamily& b) { return !(a == b); }

    std::string to_string() const;

private:
    SignaturePtr sig_;
    std::vector<std::uint64_t> masks_;  // canonical order, no duplicates
};

/// Smyth preorder: X ≼ Y iff every y in Y has some x in X with x ⊆ y.
bool smyth_leq(const AtomSetFamily& x, const AtomSetFamily& y);

/// Hoare preorder: X ≼ Y iff every x in X has some y in Y with x ⊆ y.
bool hoare_leq(const AtomSetFamily& x, const AtomSetFamily& y);

/// Precision order on pairs of families: Smyth on the lower components,
/// Hoare reversed on the upper components.
bool ai_leq(const AtomSetFamily& lower_a, const AtomSetFamily& upper_a,
            const AtomSetFamily& lower_b, const AtomSetFamily& upper_b);

} // namespace choral

#endif
