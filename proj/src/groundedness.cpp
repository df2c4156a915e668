#include "choral/groundedness.hpp"

#include <algorithm>

namespace choral {

const char* to_string(GroundNotion notion) {
    switch (notion) {
        case GroundNotion::D: return "d";
        case GroundNotion::S: return "s";
        case GroundNotion::A: return "a";
        case GroundNotion::Erdem: return "erdem";
    }
    return "?";
}

GroundNotion ground_notion_from_string(const std::string& name) {
    if (name == "d") return GroundNotion::D;
    if (name == "s") return GroundNotion::S;
    if (name == "a") return GroundNotion::A;
    if (name == "erdem") return GroundNotion::Erdem;
    throw SemanticError("unknown groundedness notion '" + name + "' (expected d|s|a|erdem)");
}

bool is_trigger(const AtomSet& z, const AtomSet& upper, const ChoiceRule& r,
                const Limits& limits) {
    if (!z.subset_of(upper)) return false;
    for (const auto& atom : r.body) {
        // w(C) only reads w ∩ dom(C), so quantify over [z∩dom, upper∩dom].
        AtomSet lo = z & atom.dom();
        AtomSet hi = upper & atom.dom();
        bool holds = true;
        for_each_in_interval(lo, hi, [&](std::uint64_t w) {
            if (!atom.satisfied_by_mask(w)) holds = false;
        }, limits);
        if (!holds) return false;
    }
    return true;
}

namespace {

bool body_applicable(const ChoiceRule& r, const AtomSet& x) {
    for (const auto& atom : r.body)
        if (!atom.satisfied_by(x)) return false;
    return true;
}

std::uint64_t body_dom_union(const ChoiceRule& r) {
    std::uint64_t dom = 0;
    for (const auto& atom : r.body) dom |= atom.dom().bits();
    return dom;
}

/// Does rule r derive atoms at this level, given the already-derived
/// set `below` ⊆ x? Shared by the saturation deciders; the brute-force
/// oracle re-tests the same conditions against arbitrary level maps.
bool rule_fires(GroundNotion notion, const ChoiceRule& r, const AtomSet& below,
                const AtomSet& x, const Limits& limits) {
    switch (notion) {
        case GroundNotion::D:
            return body_applicable(r, x) &&
                   (body_dom_union(r) & x.bits() & ~below.bits()) == 0;
        case GroundNotion::S:
            // Triggers are antitone in the interval, so the largest
            // candidate z = below decides ∃z ⊆ below.
            return is_trigger(below, x, r, limits);
        case GroundNotion::A: {
            if (!body_applicable(r, x)) return false;
            for (const auto& atom : r.body) {
                std::uint64_t local = below.bits() & atom.dom().bits();
                bool found = false;
                for_each_submask(local, [&](std::uint64_t w) {
                    if (atom.satisfied_by_mask(w)) found = true;
                });
                if (!found) return false;
            }
            return true;
        }
        case GroundNotion::Erdem:
            break;
    }
    throw SemanticError("erdem groundedness has no saturation rule");
}

GroundednessReport saturate(GroundNotion notion, const AtomSet& x, const ChoiceProgram& p,
                            const Limits& limits) {
    GroundednessReport report{notion, false, {}, {}};
    const SignaturePtr& sig = x.signature();
    AtomSet derived = AtomSet::empty(sig);
    int level = 0;
    while (true) {
        std::uint64_t gained = 0;
        for (const auto& rule : p.rules()) {
            std::uint64_t targets = rule.head.dom().bits() & x.bits() & ~derived.bits();
            if (!targets) continue;
            if (rule_fires(notion, rule, derived, x, limits)) gained |= targets;
        }
        if (!gained) break;
        for (std::uint64_t rest = gained; rest; rest &= rest - 1)
            report.levels.emplace(std::countr_zero(rest), level);
        derived = derived.with_bits(derived.bits() | gained);
        ++level;
    }
    report.holds = x.subset_of(derived);
    if (!report.holds) {
        report.levels.clear();
        report.blocking = x - derived;
    }
    return report;
}

} // namespace

GroundednessReport is_d_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits) {
    return saturate(GroundNotion::D, x, p, limits);
}

GroundednessReport is_s_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits) {
    return saturate(GroundNotion::S, x, p, limits);
}

GroundednessReport is_a_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits) {
    return saturate(GroundNotion::A, x, p, limits);
}

GroundednessReport check_grounded(GroundNotion notion, const AtomSet& x,
                                  const ChoiceProgram& p, const Limits& limits) {
    if (notion == GroundNotion::Erdem) return erdem_grounded(x, p, limits);
    return saturate(notion, x, p, limits);
}

GroundednessReport erdem_grounded(const AtomSet& x, const ChoiceProgram& p,
                                  const Limits& limits) {
    if (!is_normal_logic(p, limits))
        throw SemanticError("erdem groundedness is defined for normal logic programs only");
    GroundednessReport report{GroundNotion::Erdem, false, {}, {}};
    const SignaturePtr& sig = x.signature();
    AtomSet derived = AtomSet::empty(sig);
    int level = 0;
    while (true) {
        std::uint64_t gained = 0;
        for (const auto& rule : p.rules()) {
            std::uint64_t targets = rule.head.dom().bits() & x.bits() & ~derived.bits();
            if (!targets) continue;
            std::uint64_t pos = 0;
            for (const auto& atom : rule.body) {
                auto shape = literal_shape(atom, limits);
                if (shape->second) pos |= 1ull << shape->first;
            }
            if ((pos & ~derived.bits()) == 0) gained |= targets;
        }
        if (!gained) break;
        for (std::uint64_t rest = gained; rest; rest &= rest - 1)
            report.levels.emplace(std::countr_zero(rest), level);
        derived = derived.with_bits(derived.bits() | gained);
        ++level;
    }
    report.holds = x.subset_of(derived);
    if (!report.holds) {
        report.levels.clear();
        report.blocking = x - derived;
    }
    return report;
}

GroundednessReport grounded_bruteforce(GroundNotion notion, const AtomSet& x,
                                       const ChoiceProgram& p, const Limits& limits) {
    if (x.count() > 6)
        throw CapError("brute-force groundedness is limited to 6 atoms, got " +
                       std::to_string(x.count()));
    if (notion == GroundNotion::Erdem && !is_normal_logic(p, limits))
        throw SemanticError("erdem groundedness is defined for normal logic programs only");
    GroundednessReport report{notion, false, {}, {}};
    std::vector<int> atoms = x.ids();
    std::size_t n = atoms.size();
    std::vector<int> kappa(n, 0);

    auto below_of = [&](std::size_t i) {
        std::uint64_t below = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (kappa[j] < kappa[i]) below |= 1ull << atoms[j];
        return AtomSet(x.signature(), below);
    };
    auto rule_ok = [&](const ChoiceRule& rule, const AtomSet& below) {
        if (notion == GroundNotion::Erdem) {
            std::uint64_t pos = 0;
            for (const auto& atom : rule.body) {
                auto shape = literal_shape(atom, limits);
                if (shape->second) pos |= 1ull << shape->first;
            }
            return (pos & ~below.bits()) == 0;
        }
        if (notion == GroundNotion::S) {
            bool found = false;
            for_each_submask(below.bits(), [&](std::uint64_t z) {
                if (!found && is_trigger(x.with_bits(z), x, rule, limits)) found = true;
            });
            return found;
        }
        return rule_fires(notion, rule, below, x, limits);
    };
    auto works = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            AtomSet below = below_of(i);
            bool witnessed = false;
            for (const auto& rule : p.rules()) {
                if (!rule.head.dom().contains(atoms[i])) continue;
                if (rule_ok(rule, below)) { witnessed = true; break; }
            }
            if (!witnessed) return false;
        }
        return true;
    };

    while (true) {
        if (works()) {
            report.holds = true;
            for (std::size_t i = 0; i < n; ++i) report.levels.emplace(atoms[i], kappa[i]);
            return report;
        }
        std::size_t i = 0;
        while (i < n && kappa[i] == static_cast<int>(n) - 1) kappa[i++] = 0;
        if (i == n) break;
        ++kappa[i];
    }
    report.blocking = x;
    return report;
}

std::vector<GroundednessTableRow> groundedness_of_cstable(OperatorKind kind,
                                                          const ChoiceProgram& p,
                                                          const Limits& limits) {
    StableResult stable =
        c_stable_fixpoints(kind, p, /*totals_only=*/kind == OperatorKind::GZ, limits);
    std::vector<GroundednessTableRow> rows;
    for (const auto& sp : stable.pairs) {
        GroundednessTableRow row{sp.pair, false, false, false, false, false, false};
        row.lower_d = is_d_grounded(sp.pair.lower, p, limits).holds;
        row.lower_s = is_s_grounded(sp.pair.lower, p, limits).holds;
        row.lower_a = is_a_grounded(sp.pair.lower, p, limits).holds;
        row.upper_d = is_d_grounded(sp.pair.upper, p, limits).holds;
        row.upper_s = is_s_grounded(sp.pair.upper, p, limits).holds;
        row.upper_a = is_a_grounded(sp.pair.upper, p, limits).holds;
        rows.push_back(row);
    }
    return rows;
}

} // namespace choral
