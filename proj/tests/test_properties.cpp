#include <doctest.h>

#include "choral/oracles.hpp"
#include "support.hpp"

using namespace choral;
using namespace choral::test;

namespace {

struct Bounds {
    AtomSetFamily lower;
    AtomSetFamily upper;
};

/// All four operators at one pair, from the unchecked bounds.
std::array<Bounds, 4> bounds_at(const ChoiceProgram& p, const Pair& pair) {
    AtomSetFamily interval = ic_upper_unchecked(OperatorKind::ULT, p, pair);
    AtomSetFamily gz = ic_lower_unchecked(OperatorKind::GZ, p, pair);
    return {Bounds{ic_lower_unchecked(OperatorKind::GZ, p, pair), gz},
            Bounds{ic_lower_unchecked(OperatorKind::LPST, p, pair), interval},
            Bounds{ic_lower_unchecked(OperatorKind::MR, p, pair), interval},
            Bounds{interval, interval}};
}

std::size_t index_of(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::GZ: return 0;
        case OperatorKind::LPST: return 1;
        case OperatorKind::MR: return 2;
        case OperatorKind::ULT: return 3;
    }
    return 0;
}

std::vector<AtomSet> lower_projection(const StableResult& result) {
    std::vector<AtomSet> out;
    for (const auto& sp : result.pairs) out.push_back(sp.pair.lower);
    return out;
}

std::vector<AtomSet> canonical(std::vector<AtomSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const AtomSet& a, const AtomSet& b) { return canonical_less(a, b); });
    return sets;
}

} // namespace

TEST_CASE("every operator is exact") {
    auto s = sig({"a", "b", "c", "d"});
    std::mt19937 rng(61);
    int tested = 0;
    while (tested < 200) {
        ChoiceProgram p = random_program(s, rng);
        if (!assumption_ok(p)) continue;
        ++tested;
        for (const auto& x : all_sets(s)) {
            AtomSetFamily expected = ic(p, x);
            for (OperatorKind kind : all_operator_kinds()) {
                NdaoOutput out = apply_ndao(kind, p, Pair{x, x});
                CHECK(out.lower == expected);
                CHECK(out.upper == expected);
            }
        }
    }
}

TEST_CASE("precision monotonicity of the approximation operators") {
    std::mt19937 rng(62);
    auto s3 = sig({"p", "q", "r"});
    auto s4 = sig({"p", "q", "r", "t"});
    for (int i = 0; i < 520; ++i) {
        const auto& s = i < 460 ? s3 : s4;
        ChoiceProgram p = random_program(s, rng, 3, 2);
        std::vector<Pair> pairs = all_pairs(s);
        std::vector<std::array<Bounds, 4>> at;
        at.reserve(pairs.size());
        for (const auto& pair : pairs) at.push_back(bounds_at(p, pair));

        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                if (!leq_i(pairs[a], pairs[b])) continue;
                // LPST and ULT are monotone on the whole bilattice.
                // Empty families fall outside the operators' stated
                // codomain and are skipped.
                for (OperatorKind kind : {OperatorKind::LPST, OperatorKind::ULT}) {
                    const Bounds& at_a = at[a][index_of(kind)];
                    const Bounds& at_b = at[b][index_of(kind)];
                    if (at_a.lower.empty() || at_a.upper.empty() ||
                        at_b.lower.empty() || at_b.upper.empty())
                        continue;
                    CHECK(ai_leq(at_a.lower, at_a.upper, at_b.lower, at_b.upper));
                }
                // GZ: the lower bound is Smyth-monotone between
                // consistent pairs (that is the part that fails on
                // inconsistent input; growing head sets can still widen
                // the upper bound, so no Hoare condition holds).
                if (pairs[a].consistent() && pairs[b].consistent()) {
                    const Bounds& at_a = at[a][index_of(OperatorKind::GZ)];
                    const Bounds& at_b = at[b][index_of(OperatorKind::GZ)];
                    if (!at_a.lower.empty() && !at_b.lower.empty())
                        CHECK(smyth_leq(at_a.lower, at_b.lower));
                }
            }
        }

        // MR satisfies the weaker, argument-wise conditions.
        const std::size_t mr = index_of(OperatorKind::MR);
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                const AtomSetFamily& la = at[a][mr].lower;
                const AtomSetFamily& lb = at[b][mr].lower;
                if (pairs[a].upper == pairs[b].upper &&
                    pairs[a].lower.subset_of(pairs[b].lower) && !la.empty() &&
                    !lb.empty())
                    CHECK(smyth_leq(la, lb));
                const AtomSetFamily& ua = at[a][mr].upper;
                const AtomSetFamily& ub = at[b][mr].upper;
                if (pairs[a].lower == pairs[b].lower &&
                    pairs[a].upper.subset_of(pairs[b].upper) && !ua.empty() &&
                    !ub.empty())
                    CHECK(hoare_leq(ua, ub));
            }
        }
    }
}

TEST_CASE("MR and LPST coincide on normal programs") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(63);
    for (int i = 0; i < 200; ++i) {
        ChoiceProgram p = random_normal_program(s, rng);
        for (const auto& pair : consistent_pairs(s)) {
            CHECK(ic_lower_unchecked(OperatorKind::MR, p, pair) ==
                  ic_lower_unchecked(OperatorKind::LPST, p, pair));
            CHECK(ic_upper_unchecked(OperatorKind::MR, p, pair) ==
                  ic_upper_unchecked(OperatorKind::LPST, p, pair));
        }
    }
}

TEST_CASE("the localized interval quantifier matches full enumeration") {
    ChoiceProgram ex1 = parse_choice("1 {p; q} 2 :- {p; q} != 1.");
    for (const auto& pair : consistent_pairs(ex1.signature()))
        CHECK(oracles::naive_lpst_hd(ex1, pair) ==
              hd_lower(OperatorKind::LPST, ex1, pair));

    auto s = sig({"a", "b", "c", "d", "e"});
    std::mt19937 rng(64);
    for (int i = 0; i < 120; ++i) {
        ChoiceProgram p = random_program(s, rng, 4, 2);
        for (int j = 0; j < 24; ++j) {
            std::uint64_t universe = AtomSet::universe(s).bits();
            AtomSet x(s, random_mask(rng, universe));
            AtomSet y(s, random_mask(rng, universe) | x.bits());
            Pair pair{x, y};
            CHECK(oracles::naive_lpst_hd(p, pair) ==
                  hd_lower(OperatorKind::LPST, p, pair));
        }
    }
}

TEST_CASE("LPST reduces to the three-valued one-step operator") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(65);
    for (int i = 0; i < 150; ++i) {
        ChoiceProgram p = random_normal_logic_program(s, rng);
        for (const auto& pair : consistent_pairs(s)) {
            Pair step = oracles::fitting_step(p, pair);
            AtomSetFamily lower = ic_lower_unchecked(OperatorKind::LPST, p, pair);
            REQUIRE(lower.masks().size() == 1);
            CHECK(lower.masks()[0] == step.lower.bits());
            std::uint64_t possible = 0;
            AtomSetFamily upper = ic_upper_unchecked(OperatorKind::LPST, p, pair);
            for (std::uint64_t m : upper.masks()) possible |= m;
            CHECK(possible == step.upper.bits());
        }
    }
}

TEST_CASE("total constructive stability matches the reduct oracle") {
    CHECK(oracles::gl_stable_models(parse_choice("p :- not q. q :- not p.")).size() == 2);
    ChoiceProgram loop = parse_choice("p :- p.");
    CHECK(oracles::gl_stable_models(loop) ==
          std::vector<AtomSet>{set(loop.signature(), "")});

    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(66);
    for (int i = 0; i < 120; ++i) {
        ChoiceProgram p = random_normal_logic_program(s, rng);
        CHECK(lower_projection(c_stable_fixpoints(OperatorKind::LPST, p, true)) ==
              canonical(oracles::gl_stable_models(p)));
    }
}

TEST_CASE("partial constructive stability against the partial reduct oracle") {
    auto pairs_of = [](const StableResult& result) {
        std::vector<Pair> out;
        for (const auto& sp : result.pairs) out.push_back(sp.pair);
        return out;
    };
    auto has = [](const std::vector<Pair>& pairs, const Pair& pair) {
        return std::find(pairs.begin(), pairs.end(), pair) != pairs.end();
    };

    ChoiceProgram odd = parse_choice("p :- not p.");
    auto os = odd.signature();
    CHECK(has(oracles::gl_partial_stable(odd), pr(os, ";p")));
    CHECK(has(pairs_of(c_stable_fixpoints(OperatorKind::LPST, odd, false)),
              pr(os, ";p")));

    // The two notions diverge when the upper bound needs several reduct
    // stages: below, no single interval point fires both the q-rule and
    // the r-rule, so the constructive upper bound stops at {p,q} while
    // the reduct iteration reaches {p,q,r}.
    ChoiceProgram stage = parse_choice("r :- q. q :- p, not q. p.");
    auto ss = stage.signature();
    std::vector<Pair> stage_oracle = oracles::gl_partial_stable(stage);
    std::vector<Pair> stage_cstable =
        pairs_of(c_stable_fixpoints(OperatorKind::LPST, stage, false));
    CHECK(has(stage_oracle, pr(ss, "p;p,q,r")));
    CHECK(!has(stage_oracle, pr(ss, "p;p,q")));
    CHECK(has(stage_cstable, pr(ss, "p;p,q")));
    CHECK(!has(stage_cstable, pr(ss, "p;p,q,r")));

    // What does hold on normal logic programs: the frozen lower bound is
    // the deterministic reduct iteration, so every consistent c-stable
    // pair has x = Γ(y), and the upper bound never outruns Γ(x).
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(67);
    for (int i = 0; i < 120; ++i) {
        ChoiceProgram p = random_normal_logic_program(s, rng);
        for (const auto& y : all_sets(s)) {
            // Once the iteration escapes y the interval goes empty and
            // every rule fires, so the reduct correspondence only covers
            // the case Γ(y) ⊆ y.
            AtomSet gamma = oracles::gl_gamma(p, y);
            if (!gamma.subset_of(y)) continue;
            AtomSetFamily reachable = c_complete_lower(OperatorKind::LPST, p, y).sets;
            REQUIRE(reachable.masks().size() == 1);
            CHECK(reachable.masks()[0] == gamma.bits());
        }
        for (const auto& sp : c_stable_fixpoints(OperatorKind::LPST, p, false).pairs) {
            if (!sp.pair.consistent()) continue;
            CHECK(sp.pair.lower == oracles::gl_gamma(p, sp.pair.upper));
            CHECK(sp.pair.upper.subset_of(oracles::gl_gamma(p, sp.pair.lower)));
        }
    }
}

TEST_CASE("the reduct-program construction") {
    ChoiceProgram free = parse_choice("1 {p; q} 2.");
    auto fs = free.signature();
    oracles::NssProgram reduct = oracles::nss_build(free, set(fs, "p,q"));
    REQUIRE(reduct.rules.size() == 2);
    CHECK(reduct.rules[0].head == fs->require("p"));
    CHECK(reduct.rules[1].head == fs->require("q"));
    CHECK(reduct.rules[0].body.empty());

    ChoiceProgram agg = parse_choice("{p; q} = 2 :- {p; q} != 1.");
    auto as = agg.signature();
    oracles::NssProgram agg_reduct = oracles::nss_build(agg, set(as, "p,q"));
    REQUIRE(agg_reduct.rules.size() == 2);
    REQUIRE(agg_reduct.rules[0].body.size() == 1);
    // The derived body atom is satisfied by every subset: the empty
    // satisfier seeds the whole interval below {p,q}.
    CHECK(agg_reduct.rules[0].body[0].sat_masks().size() == 4);
    CHECK(oracles::nss_least_model(agg, set(as, "p,q")) == set(as, "p,q"));
    CHECK(oracles::mr_stable_via_nss(agg) == std::vector<AtomSet>{set(as, "p,q")});

    // Rules with bodies false under y are dropped.
    ChoiceProgram guarded = parse_choice("p :- q. q.");
    auto gs = guarded.signature();
    CHECK(oracles::nss_build(guarded, set(gs, "q")).rules.size() == 1);

    ChoiceProgram fact = parse_choice("a.");
    auto cs = fact.signature();
    CHECK(oracles::nss_least_model(fact, set(cs, "a")) == set(cs, "a"));
}

TEST_CASE("MR stability matches the reduct-program oracle") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(68);
    int tested = 0;
    while (tested < 100) {
        ChoiceProgram p = random_program(s, rng);
        if (!assumption_ok(p)) continue;
        ++tested;
        CHECK(lower_projection(c_stable_fixpoints(OperatorKind::MR, p, true)) ==
              canonical(oracles::mr_stable_via_nss(p)));
    }
}

TEST_CASE("minimal stable lower bounds are constructively reachable") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(69);
    for (int i = 0; i < 100; ++i) {
        ChoiceProgram p = random_program(s, rng);
        for (const auto& y : all_sets(s)) {
            for (OperatorKind kind :
                 {OperatorKind::LPST, OperatorKind::MR, OperatorKind::ULT}) {
                AtomSetFamily reachable = c_complete_lower(kind, p, y).sets;
                AtomSetFamily minimal = complete_lower_stable(kind, p, y);
                for (std::uint64_t m : minimal.masks())
                    CHECK(reachable.contains(y.with_bits(m)));
            }
        }
    }
}

TEST_CASE("GZ constructive membership is decided on the lower projection") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(70);
    for (int i = 0; i < 100; ++i) {
        ChoiceProgram p = random_program(s, rng);
        std::vector<AtomSet> totals =
            lower_projection(c_stable_fixpoints(OperatorKind::GZ, p, true));
        for (const auto& x : all_sets(s)) {
            bool member = c_complete_lower(OperatorKind::GZ, p, x).sets.contains(x);
            bool listed = std::find(totals.begin(), totals.end(), x) != totals.end();
            CHECK(member == listed);
        }
    }
}
