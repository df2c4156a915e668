#include "choral/family.hpp"

#include <algorithm>

namespace choral {

AtomSetFamily::AtomSetFamily(SignaturePtr sig, std::vector<std::uint64_t> masks)
    : sig_(std::move(sig)), masks_(std::move(masks)) {
    std::sort(masks_.begin(), masks_.end(),
              [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    for (std::uint64_t mask : masks_)
        if (mask & ~sig_->universe_mask())
            throw SemanticError("family member has bits outside its signature");
}

AtomSetFamily AtomSetFamily::of(const SignaturePtr& sig, std::vector<AtomSet> sets) {
    std::vector<std::uint64_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) {
        if (s.signature() != sig)
            throw SemanticError("family member belongs to a different signature");
        masks.push_back(s.bits());
    }
    return AtomSetFamily(sig, std::move(masks));
}

AtomSetFamily AtomSetFamily::singleton_empty(const SignaturePtr& sig) {
    return AtomSetFamily(sig, {0});
}

bool AtomSetFamily::contains(const AtomSet& x) const {
    if (x.signature() != sig_)
        throw SemanticError("family membership across signatures");
    return contains_mask(x.bits());
}

bool AtomSetFamily::contains_mask(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask,
                              [](std::uint64_t a, std::uint64_t b) {
                                  return canonical_less(a, b);
                              });
}

void AtomSetFamily::insert_mask(std::uint64_t mask) {
    if (mask & ~sig_->universe_mask())
        throw SemanticError("family member has bits outside its signature");
    auto it = std::lower_bound(masks_.begin(), masks_.end(), mask,
                               [](std::uint64_t a, std::uint64_t b) {
                                   return canonical_less(a, b);
                               });
    if (it == masks_.end() || *it != mask) masks_.insert(it, mask);
}

void AtomSetFamily::merge(const AtomSetFamily& other) {
    if (other.sig_ != sig_)
        throw SemanticError("family merge across signatures");
    for (std::uint64_t mask : other.masks_) insert_mask(mask);
}

std::vector<AtomSet> AtomSetFamily::sets() const {
    std::vector<AtomSet> out;
    out.reserve(masks_.size());
    for (std::uint64_t mask : masks_) out.emplace_back(sig_, mask);
    return out;
}

std::string AtomSetFamily::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t mask : masks_) {
        if (!first) out += ", ";
        out += AtomSet(sig_, mask).to_string();
        first = false;
    }
    return out + "}";
}

bool smyth_leq(const AtomSetFamily& x, const AtomSetFamily& y) {
    for (std::uint64_t b : y.masks()) {
        bool covered = false;
        for (std::uint64_t a : x.masks()) {
            if ((a & ~b) == 0) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

bool hoare_leq(const AtomSetFamily& x, const AtomSetFamily& y) {
    for (std::uint64_t a : x.masks()) {
        bool covered = false;
        for (std::uint64_t b : y.masks()) {
            if ((a & ~b) == 0) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

bool ai_leq(const AtomSetFamily& lower_a, const AtomSetFamily& upper_a,
            const AtomSetFamily& lower_b, const AtomSetFamily& upper_b) {
    return smyth_leq(lower_a, lower_b) && hoare_leq(upper_b, upper_a);
}

} // namespace choral
