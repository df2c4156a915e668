#ifndef CHORAL_ATOM_SET_HPP
#define CHORAL_ATOM_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "choral/signature.hpp"

namespace choral {

/// A subset of a signature, stored as a bit mask over atom ids.
/// Immutable value type; equality is extensional.
class AtomSet {
public:
    AtomSet(SignaturePtr sig, std::uint64_t bits);

    static AtomSet empty(SignaturePtr sig) { return AtomSet(std::move(sig), 0); }
    static AtomSet universe(SignaturePtr sig);
    static AtomSet of(const SignaturePtr& sig, const std::vector<std::string>& names);

    const SignaturePtr& signature() const { return sig_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int id) const { return (bits_ >> id) & 1u; }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool is_empty() const { return bits_ == 0; }

    bool subset_of(const AtomSet& other) const;

    AtomSet with_bits(std::uint64_t bits) const { return AtomSet(sig_, bits); }

    friend AtomSet operator|(const AtomSet& a, const AtomSet& b);
    friend AtomSet operator&(const AtomSet& a, const AtomSet& b);
    /// Set difference a \ b.
    friend AtomSet operator-(const AtomSet& a, const AtomSet& b);

    friend bool operator==(const AtomSet& a, const AtomSet& b);
    friend bool operator!=(const AtomSet& a, const AtomSet& b) { return !(a == b); }

    std::vector<int> ids() const;
    std::vector<std::string> names() const;

    /// Renders as {a, b} for diagnostics.
    std::string to_string() const;

private:
    SignaturePtr sig_;
    std::uint64_t bits_;
};

/// Canonical order on sets of one signature: cardinality first, then
/// lexicographic on the ascending atom-id sequence. Total, deterministic,
/// and stable across runs; used for every family and output ordering.
bool canonical_less(std::uint64_t a, std::uint64_t b);
bool canonical_less(const AtomSet& a, const AtomSet& b);

void require_same_signature(const AtomSet& a, const AtomSet& b);

/// A four-valued interpretation: atoms in `lower` are true, atoms in
/// `upper` are not false. Consistency (lower ⊆ upper) is not enforced
/// at construction; some operator counterexamples need inconsistent pairs.
struct Pair {
    AtomSet lower;
    AtomSet upper;

    bool consistent() const { return lower.subset_of(upper); }
    bool total() const { return lower == upper; }

    friend bool operator==(const Pair& a, const Pair& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
    std::string to_string() const {
        return "(" + lower.to_string() + "," + upper.to_string() + ")";
    }
};

/// Precision (information) order: a.lower ⊆ b.lower and a.upper ⊇ b.upper.
bool leq_i(const Pair& a, const Pair& b);
/// Truth order: componentwise inclusion.
bool leq_t(const Pair& a, const Pair& b);

/// Enumerates [x, y] = {z | x ⊆ z ⊆ y} in canonical order. Empty when
/// x ⊄ y. Refuses intervals with more than `limits.max_interval_atoms`
/// free atoms.
std::vector<AtomSet> interval(const AtomSet& x, const AtomSet& y,
                              const Limits& limits = default_limits());

/// Calls fn for every z in [x, y], in an unspecified order. Same cap as
/// interval(). Does nothing when x ⊄ y.
void for_each_in_interval(const AtomSet& x, const AtomSet& y,
                          const std::function<void(std::uint64_t)>& fn,
                          const Limits& limits = default_limits());

/// Calls fn for every subset mask of `mask`, including 0 and mask itself.
void for_each_submask(std::uint64_t mask, const std::function<void(std::uint64_t)>& fn);

} // namespace choral

#endif
