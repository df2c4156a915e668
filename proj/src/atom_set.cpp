#include "choral/atom_set.hpp"

#include <algorithm>

namespace choral {

AtomSet::AtomSet(SignaturePtr sig, std::uint64_t bits) : sig_(std::move(sig)), bits_(bits) {
    if (!sig_) throw SemanticError("atom set requires a signature");
    if (bits_ & ~sig_->universe_mask())
        throw SemanticError("atom set has bits outside its signature");
}

AtomSet AtomSet::universe(SignaturePtr sig) {
    std::uint64_t mask = sig->universe_mask();
    return AtomSet(std::move(sig), mask);
}

AtomSet AtomSet::of(const SignaturePtr& sig, const std::vector<std::string>& names) {
    std::uint64_t bits = 0;
    for (const auto& name : names) bits |= 1ull << sig->require(name);
    return AtomSet(sig, bits);
}

bool AtomSet::subset_of(const AtomSet& other) const {
    require_same_signature(*this, other);
    return (bits_ & ~other.bits_) == 0;
}

AtomSet operator|(const AtomSet& a, const AtomSet& b) {
    require_same_signature(a, b);
    return AtomSet(a.sig_, a.bits_ | b.bits_);
}

AtomSet operator&(const AtomSet& a, const AtomSet& b) {
    require_same_signature(a, b);
    return AtomSet(a.sig_, a.bits_ & b.bits_);
}

AtomSet operator-(const AtomSet& a, const AtomSet& b) {
    require_same_signature(a, b);
    return AtomSet(a.sig_, a.bits_ & ~b.bits_);
}

bool operator==(const AtomSet& a, const AtomSet& b) {
    require_same_signature(a, b);
    return a.bits_ == b.bits_;
}

std::vector<int> AtomSet::ids() const {
    std::vector<int> out;
    for (std::uint64_t rest = bits_; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

std::vector<std::string> AtomSet::names() const {
    std::vector<std::string> out;
    for (int id : ids()) out.push_back(sig_->name(id));
    return out;
}

std::string AtomSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int id : ids()) {
        if (!first) out += ",";
        out += sig_->name(id);
        first = false;
    }
    return out + "}";
}

bool canonical_less(std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // Same cardinality: compare the ascending id sequences lexicographically.
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

bool canonical_less(const AtomSet& a, const AtomSet& b) {
    require_same_signature(a, b);
    return canonical_less(a.bits(), b.bits());
}

void require_same_signature(const AtomSet& a, const AtomSet& b) {
    if (a.signature() != b.signature())
        throw SemanticError("atom sets belong to different signatures");
}

bool leq_i(const Pair& a, const Pair& b) {
    return a.lower.subset_of(b.lower) && b.upper.subset_of(a.upper);
}

bool leq_t(const Pair& a, const Pair& b) {
    return a.lower.subset_of(b.lower) && a.upper.subset_of(b.upper);
}

std::vector<AtomSet> interval(const AtomSet& x, const AtomSet& y, const Limits& limits) {
    std::vector<AtomSet> out;
    for_each_in_interval(x, y, [&](std::uint64_t bits) { out.push_back(x.with_bits(bits)); },
                         limits);
    std::sort(out.begin(), out.end(),
              [](const AtomSet& a, const AtomSet& b) { return canonical_less(a, b); });
    return out;
}

void for_each_in_interval(const AtomSet& x, const AtomSet& y,
                          const std::function<void(std::uint64_t)>& fn, const Limits& limits) {
    if (!x.subset_of(y)) return;
    std::uint64_t free = y.bits() & ~x.bits();
    if (static_cast<std::size_t>(std::popcount(free)) > limits.max_interval_atoms)
        throw CapError("interval too large: " + std::to_string(std::popcount(free)) +
                       " free atoms exceed the cap of " +
                       std::to_string(limits.max_interval_atoms));
    for_each_submask(free, [&](std::uint64_t sub) { fn(x.bits() | sub); });
}

void for_each_submask(std::uint64_t mask, const std::function<void(std::uint64_t)>& fn) {
    std::uint64_t sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

} // namespace choral
