#include "choral/choice_atom.hpp"

#include <algorithm>
#include <bit>

namespace choral {

namespace {

std::vector<int> dom_positions(const AtomSet& dom) {
    return dom.ids();
}

// Expands a mask over local indices 0..n-1 to the global bit positions.
std::uint64_t to_global(std::uint64_t local, const std::vector<int>& positions) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if ((local >> i) & 1u) out |= 1ull << positions[i];
    return out;
}

void require_dom_cap(const AtomSet& dom, const Limits& limits) {
    if (dom.count() > limits.max_dom_atoms)
        throw CapError("choice-atom domain of " + std::to_string(dom.count()) +
                       " atoms exceeds the cap of " + std::to_string(limits.max_dom_atoms));
}

} // namespace

ChoiceAtom ChoiceAtom::cardinality(AtomSet dom, unsigned lo, std::optional<unsigned> hi) {
    if (dom.is_empty()) throw SemanticError("cardinality atom needs a non-empty domain");
    if (hi && lo > *hi)
        throw SemanticError("cardinality atom with lower bound above upper bound");
    ChoiceAtom atom(std::move(dom), SatKind::Cardinality);
    atom.lo_ = lo;
    atom.hi_ = hi;
    return atom;
}

ChoiceAtom ChoiceAtom::count_eq(AtomSet dom, unsigned k) {
    if (dom.is_empty()) throw SemanticError("count atom needs a non-empty domain");
    if (k > dom.count())
        throw SemanticError("count atom {...}=" + std::to_string(k) +
                            " can never be satisfied by its domain");
    ChoiceAtom atom(std::move(dom), SatKind::CountEq);
    atom.k_ = k;
    return atom;
}

ChoiceAtom ChoiceAtom::count_neq(AtomSet dom, unsigned k) {
    if (dom.is_empty()) throw SemanticError("count atom needs a non-empty domain");
    ChoiceAtom atom(std::move(dom), SatKind::CountNeq);
    atom.k_ = k;
    return atom;
}

ChoiceAtom ChoiceAtom::literal(const SignaturePtr& sig, int atom_id, bool positive) {
    AtomSet dom(sig, 1ull << atom_id);
    ChoiceAtom atom(std::move(dom), positive ? SatKind::PosLiteral : SatKind::NegLiteral);
    return atom;
}

ChoiceAtom ChoiceAtom::extensional(AtomSet dom, const std::vector<AtomSet>& satisfiers) {
    std::vector<std::uint64_t> masks;
    masks.reserve(satisfiers.size());
    for (const auto& s : satisfiers) masks.push_back(s.bits());
    return extensional_masks(std::move(dom), std::move(masks));
}

ChoiceAtom ChoiceAtom::extensional_masks(AtomSet dom, std::vector<std::uint64_t> sat_masks) {
    if (dom.is_empty()) throw SemanticError("explicit choice atom needs a non-empty domain");
    for (std::uint64_t mask : sat_masks)
        if (mask & ~dom.bits())
            throw SemanticError("explicit satisfier is not a subset of the domain");
    std::sort(sat_masks.begin(), sat_masks.end());
    sat_masks.erase(std::unique(sat_masks.begin(), sat_masks.end()), sat_masks.end());
    ChoiceAtom atom(std::move(dom), SatKind::Extensional);
    atom.sat_ = std::move(sat_masks);
    return atom;
}

bool ChoiceAtom::satisfied_by_mask(std::uint64_t x_bits) const {
    std::uint64_t m = x_bits & dom_.bits();
    switch (kind_) {
        case SatKind::Extensional:
            return std::binary_search(sat_.begin(), sat_.end(), m);
        case SatKind::Cardinality: {
            unsigned c = static_cast<unsigned>(std::popcount(m));
            return c >= lo_ && (!hi_ || c <= *hi_);
        }
        case SatKind::CountEq:
            return static_cast<unsigned>(std::popcount(m)) == k_;
        case SatKind::CountNeq:
            return static_cast<unsigned>(std::popcount(m)) != k_;
        case SatKind::PosLiteral:
            return m != 0;
        case SatKind::NegLiteral:
            return m == 0;
    }
    return false;
}

ChoiceAtom ChoiceAtom::extensionalize(const Limits& limits) const {
    require_dom_cap(dom_, limits);
    if (kind_ == SatKind::Extensional) return *this;
    auto positions = dom_positions(dom_);
    std::vector<std::uint64_t> masks;
    std::uint64_t n = 1ull << positions.size();
    for (std::uint64_t local = 0; local < n; ++local) {
        std::uint64_t global = to_global(local, positions);
        if (satisfied_by_mask(global)) masks.push_back(global);
    }
    return extensional_masks(dom_, std::move(masks));
}

bool operator==(const ChoiceAtom& a, const ChoiceAtom& b) {
    if (a.kind_ != b.kind_ || a.dom_ != b.dom_) return false;
    switch (a.kind_) {
        case SatKind::Extensional: return a.sat_ == b.sat_;
        case SatKind::Cardinality: return a.lo_ == b.lo_ && a.hi_ == b.hi_;
        case SatKind::CountEq:
        case SatKind::CountNeq: return a.k_ == b.k_;
        case SatKind::PosLiteral:
        case SatKind::NegLiteral: return true;
    }
    return false;
}

std::string ChoiceAtom::to_string() const {
    const auto names = dom_.names();
    auto join = [&](const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) out += sep;
            out += names[i];
        }
        return out;
    };
    switch (kind_) {
        case SatKind::PosLiteral:
            return names.front();
        case SatKind::NegLiteral:
            return "not " + names.front();
        case SatKind::Cardinality: {
            std::string out;
            if (lo_ != 0) out += std::to_string(lo_) + " ";
            out += "{" + join("; ") + "}";
            if (hi_) out += " " + std::to_string(*hi_);
            return out;
        }
        case SatKind::CountEq:
            return "{" + join("; ") + "} = " + std::to_string(k_);
        case SatKind::CountNeq:
            return "{" + join("; ") + "} != " + std::to_string(k_);
        case SatKind::Extensional: {
            std::string out = "choice([" + join("; ") + "], [";
            for (std::size_t i = 0; i < sat_.size(); ++i) {
                if (i) out += "; ";
                const auto sub = AtomSet(dom_.signature(), sat_[i]).names();
                out += "[";
                for (std::size_t j = 0; j < sub.size(); ++j) {
                    if (j) out += "; ";
                    out += sub[j];
                }
                out += "]";
            }
            return out + "])";
        }
    }
    return "?";
}

bool is_monotone(const ChoiceAtom& atom, const Limits& limits) {
    require_dom_cap(atom.dom(), limits);
    auto positions = dom_positions(atom.dom());
    std::uint64_t n = 1ull << positions.size();
    for (std::uint64_t local = 0; local < n; ++local) {
        std::uint64_t global = to_global(local, positions);
        if (!atom.satisfied_by_mask(global)) continue;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if ((local >> i) & 1u) continue;
            if (!atom.satisfied_by_mask(global | (1ull << positions[i]))) return false;
        }
    }
    return true;
}

bool is_convex(const ChoiceAtom& atom, const Limits& limits) {
    require_dom_cap(atom.dom(), limits);
    auto positions = dom_positions(atom.dom());
    std::size_t bits = positions.size();
    std::uint64_t n = 1ull << bits;
    std::vector<char> sat(n), below(n), above(n);
    for (std::uint64_t local = 0; local < n; ++local)
        sat[local] = atom.satisfied_by_mask(to_global(local, positions)) ? 1 : 0;
    // below[z]: some subset of z is a satisfier; above[z]: some superset is.
    for (std::uint64_t local = 0; local < n; ++local) {
        below[local] = sat[local];
        for (std::size_t i = 0; i < bits && !below[local]; ++i)
            if ((local >> i) & 1u) below[local] = below[local ^ (1ull << i)];
    }
    for (std::uint64_t local = n; local-- > 0;) {
        above[local] = sat[local];
        for (std::size_t i = 0; i < bits && !above[local]; ++i)
            if (!((local >> i) & 1u)) above[local] = above[local | (1ull << i)];
    }
    for (std::uint64_t local = 0; local < n; ++local)
        if (below[local] && above[local] && !sat[local]) return false;
    return true;
}

std::optional<std::pair<int, bool>> literal_shape(const ChoiceAtom& atom,
                                                  const Limits& limits) {
    require_dom_cap(atom.dom(), limits);
    auto positions = dom_positions(atom.dom());
    std::uint64_t n = 1ull << positions.size();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        bool pos = true, neg = true;
        for (std::uint64_t local = 0; local < n && (pos || neg); ++local) {
            bool has = (local >> i) & 1u;
            bool sat = atom.satisfied_by_mask(to_global(local, positions));
            if (sat != has) pos = false;
            if (sat == has) neg = false;
        }
        if (pos) return std::make_pair(positions[i], true);
        if (neg) return std::make_pair(positions[i], false);
    }
    return std::nullopt;
}

std::optional<int> atom_shape(const ChoiceAtom& atom) {
    if (atom.dom().count() != 1) return std::nullopt;
    int id = atom.dom().ids().front();
    if (atom.satisfied_by_mask(atom.dom().bits()) && !atom.satisfied_by_mask(0)) return id;
    return std::nullopt;
}

} // namespace choral
