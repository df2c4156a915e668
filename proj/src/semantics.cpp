#include "choral/semantics.hpp"

#include <algorithm>
#include <deque>

namespace choral {

const char* to_string(StableFlavor flavor) {
    return flavor == StableFlavor::Minimal ? "minimal" : "constructive";
}

namespace {

void require_sweep_cap(const SignaturePtr& sig, const Limits& limits) {
    if (sig->size() > limits.max_sweep_atoms)
        throw CapError("exhaustive sweep over " + std::to_string(sig->size()) +
                       " atoms exceeds the cap of " + std::to_string(limits.max_sweep_atoms));
}

/// Breadth-first closure from `start` under {x' ∈ op(x) | x ⊆ x'};
/// parents give shortest witness sequences.
WfsResult bfs_closure(const SignaturePtr& sig, const NdOp& op, std::uint64_t start,
                      const Limits& limits) {
    WfsResult result{AtomSetFamily(sig), {}};
    std::map<std::uint64_t, std::uint64_t> parent;
    std::deque<std::uint64_t> queue{start};
    parent.emplace(start, start);
    while (!queue.empty()) {
        std::uint64_t x = queue.front();
        queue.pop_front();
        AtomSetFamily next = op(AtomSet(sig, x));
        for (std::uint64_t x2 : next.masks()) {
            if ((x & ~x2) != 0 || parent.count(x2)) continue;
            if (parent.size() >= limits.max_states)
                throw CapError("reachability search exceeded the cap of " +
                               std::to_string(limits.max_states) + " states");
            parent.emplace(x2, x);
            queue.push_back(x2);
        }
    }
    for (const auto& [mask, _] : parent) {
        result.reachable.insert_mask(mask);
        WfsTrace trace;
        for (std::uint64_t at = mask;; at = parent.at(at)) {
            trace.steps.emplace_back(sig, at);
            if (at == start) break;
        }
        std::reverse(trace.steps.begin(), trace.steps.end());
        result.traces.emplace(mask, std::move(trace));
    }
    return result;
}

bool sort_pairs_canonical(std::vector<Pair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.lower != b.lower) return canonical_less(a.lower, b.lower);
        return canonical_less(a.upper, b.upper);
    });
    return true;
}

} // namespace

WfsResult wfs_reach(const SignaturePtr& sig, const NdOp& op, const Limits& limits) {
    return bfs_closure(sig, op, 0, limits);
}

std::vector<Pair> fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                            const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    std::uint64_t universe = sig->universe_mask();
    std::vector<Pair> out;
    auto check = [&](std::uint64_t x, std::uint64_t y) {
        Pair pair{AtomSet(sig, x), AtomSet(sig, y)};
        if (ic_lower_unchecked(kind, p, pair, limits).contains_mask(x) &&
            ic_upper_unchecked(kind, p, pair, limits).contains_mask(y))
            out.push_back(pair);
    };
    for (std::uint64_t y = 0;; ++y) {
        if (totals_only) {
            check(y, y);
        } else {
            for_each_submask(y, [&](std::uint64_t x) { check(x, y); });
        }
        if (y == universe) break;
    }
    sort_pairs_canonical(out);
    return out;
}

std::vector<AtomSet> supported_models(const ChoiceProgram& p, const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    AtomSetFamily found(sig);
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t x = 0;; ++x) {
        if (is_supported_model(AtomSet(sig, x), p)) found.insert_mask(x);
        if (x == universe) break;
    }
    return found.sets();
}

namespace {

CCompleteResult fixpoints_of_closure(const SignaturePtr& sig, const NdOp& op,
                                     std::uint64_t start, const Limits& limits) {
    WfsResult reach = bfs_closure(sig, op, start, limits);
    CCompleteResult out{AtomSetFamily(sig), {}};
    for (std::uint64_t mask : reach.reachable.masks()) {
        if (!op(AtomSet(sig, mask)).contains_mask(mask)) continue;
        out.sets.insert_mask(mask);
        out.traces.emplace(mask, reach.traces.at(mask));
    }
    return out;
}

} // namespace

CCompleteResult c_complete_lower(OperatorKind kind, const ChoiceProgram& p, const AtomSet& y,
                                 const Limits& limits) {
    NdOp op = [&, y](const AtomSet& x) {
        return ic_lower_unchecked(kind, p, Pair{x, y}, limits);
    };
    return fixpoints_of_closure(p.signature(), op, 0, limits);
}

CCompleteResult c_complete_upper(OperatorKind kind, const ChoiceProgram& p, const AtomSet& x,
                                 const Limits& limits) {
    if (kind == OperatorKind::GZ)
        throw SemanticError(
            "the gz operator has no constructive upper bound; use total pairs");
    NdOp op = [&, x](const AtomSet& y) {
        return ic_upper_unchecked(kind, p, Pair{x, y}, limits);
    };
    return fixpoints_of_closure(p.signature(), op, x.bits(), limits);
}

namespace {

AtomSetFamily minimal_members(const AtomSetFamily& family) {
    AtomSetFamily out(family.signature());
    for (std::uint64_t a : family.masks()) {
        bool minimal = true;
        for (std::uint64_t b : family.masks())
            if (b != a && (b & ~a) == 0) { minimal = false; break; }
        if (minimal) out.insert_mask(a);
    }
    return out;
}

AtomSetFamily lattice_fixpoints(const SignaturePtr& sig, const NdOp& op,
                                const Limits& limits) {
    require_sweep_cap(sig, limits);
    AtomSetFamily out(sig);
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t x = 0;; ++x) {
        if (op(AtomSet(sig, x)).contains_mask(x)) out.insert_mask(x);
        if (x == universe) break;
    }
    return out;
}

} // namespace

AtomSetFamily complete_lower_stable(OperatorKind kind, const ChoiceProgram& p,
                                    const AtomSet& y, const Limits& limits) {
    NdOp op = [&, y](const AtomSet& x) {
        return ic_lower_unchecked(kind, p, Pair{x, y}, limits);
    };
    return minimal_members(lattice_fixpoints(p.signature(), op, limits));
}

AtomSetFamily complete_upper_stable(OperatorKind kind, const ChoiceProgram& p,
                                    const AtomSet& x, const Limits& limits) {
    NdOp op = [&, x](const AtomSet& y) {
        return ic_upper_unchecked(kind, p, Pair{x, y}, limits);
    };
    return minimal_members(lattice_fixpoints(p.signature(), op, limits));
}

StableResult stable_fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                              const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    StableResult result{kind, StableFlavor::Minimal, {}};
    std::map<std::uint64_t, AtomSetFamily> upper_memo;
    auto upper_stable = [&](std::uint64_t x) -> const AtomSetFamily& {
        auto it = upper_memo.find(x);
        if (it == upper_memo.end())
            it = upper_memo.emplace(x, complete_upper_stable(kind, p, AtomSet(sig, x), limits))
                     .first;
        return it->second;
    };
    std::uint64_t universe = sig->universe_mask();
    std::vector<Pair> pairs;
    for (std::uint64_t y = 0;; ++y) {
        AtomSet upper(sig, y);
        AtomSetFamily lowers = complete_lower_stable(kind, p, upper, limits);
        for (std::uint64_t x : lowers.masks()) {
            if (totals_only && x != y) continue;
            if (upper_stable(x).contains_mask(y))
                pairs.push_back(Pair{AtomSet(sig, x), upper});
        }
        if (y == universe) break;
    }
    sort_pairs_canonical(pairs);
    for (const auto& pair : pairs) result.pairs.push_back(StablePair{pair, {}, {}});
    return result;
}

StableResult c_stable_fixpoints(OperatorKind kind, const ChoiceProgram& p, bool totals_only,
                                const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    if (kind == OperatorKind::GZ && !totals_only)
        throw SemanticError(
            "gz constructive stability is only defined for total fixpoints");
    StableResult result{kind, StableFlavor::Constructive, {}};
    std::uint64_t universe = sig->universe_mask();
    std::vector<StablePair> pairs;
    if (totals_only) {
        for (std::uint64_t y = 0;; ++y) {
            AtomSet upper(sig, y);
            CCompleteResult lower = c_complete_lower(kind, p, upper, limits);
            if (lower.sets.contains_mask(y)) {
                // For total pairs both projections agree at y, so the
                // lower witness doubles as the upper one.
                WfsTrace trace = lower.traces.at(y);
                pairs.push_back(StablePair{Pair{upper, upper}, trace, trace});
            }
            if (y == universe) break;
        }
    } else {
        std::map<std::uint64_t, CCompleteResult> upper_memo;
        for (std::uint64_t y = 0;; ++y) {
            AtomSet upper(sig, y);
            CCompleteResult lower = c_complete_lower(kind, p, upper, limits);
            for (std::uint64_t x : lower.sets.masks()) {
                auto it = upper_memo.find(x);
                if (it == upper_memo.end())
                    it = upper_memo
                             .emplace(x, c_complete_upper(kind, p, AtomSet(sig, x), limits))
                             .first;
                if (it->second.sets.contains_mask(y))
                    pairs.push_back(StablePair{Pair{AtomSet(sig, x), upper},
                                               lower.traces.at(x),
                                               it->second.traces.at(y)});
            }
            if (y == universe) break;
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const StablePair& a, const StablePair& b) {
        if (a.pair.lower != b.pair.lower) return canonical_less(a.pair.lower, b.pair.lower);
        return canonical_less(a.pair.upper, b.pair.upper);
    });
    result.pairs = std::move(pairs);
    return result;
}

std::vector<AtomSet> prefixpoint_models(const ChoiceProgram& p, const Limits& limits) {
    const SignaturePtr& sig = p.signature();
    require_sweep_cap(sig, limits);
    for (const auto& rule : p.rules())
        if (!is_monotone(rule.head, limits))
            throw SemanticError("prefixpoint models need monotone rule heads");
    AtomSetFamily found(sig);
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t x = 0;; ++x) {
        AtomSetFamily family = ic_unchecked(p, AtomSet(sig, x), limits);
        for (std::uint64_t z : family.masks())
            if ((z & ~x) == 0) { found.insert_mask(x); break; }
        if (x == universe) break;
    }
    return found.sets();
}

} // namespace choral
