#include <doctest.h>

#include "support.hpp"

using namespace choral;
using namespace choral::test;

namespace {

/// Re-validates a well-founded sequence against a frozen-bound operator.
void validate_trace(const WfsTrace& trace, const NdOp& op) {
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front().is_empty());
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].subset_of(trace.steps[i + 1]));
        CHECK(op(trace.steps[i]).contains(trace.steps[i + 1]));
    }
    CHECK(op(trace.terminal()).contains(trace.terminal()));
}

std::vector<Pair> result_pairs(const StableResult& result) {
    std::vector<Pair> out;
    for (const auto& sp : result.pairs) out.push_back(sp.pair);
    return out;
}

} // namespace

TEST_CASE("supported models") {
    ChoiceProgram ex1 = parse_choice("1 {p; q} 2 :- {p; q} != 1.");
    CHECK(supported_models(ex1) == std::vector<AtomSet>{set(ex1.signature(), "p,q")});

    ChoiceProgram gain = parse_choice("{p; q} = 1 :- {p} != 1. p :- q.");
    CHECK(supported_models(gain).empty());

    ChoiceProgram fact = parse_choice("a.");
    CHECK(supported_models(fact) == std::vector<AtomSet>{set(fact.signature(), "a")});
}

TEST_CASE("total fixpoints of every operator are the supported models") {
    auto s = sig({"p", "q", "r"});
    std::mt19937 rng(21);
    for (int i = 0; i < 80; ++i) {
        ChoiceProgram p = random_program(s, rng);
        std::vector<AtomSet> supported = supported_models(p);
        for (OperatorKind kind : all_operator_kinds()) {
            std::vector<Pair> totals = fixpoints(kind, p, true);
            REQUIRE(totals.size() == supported.size());
            for (std::size_t j = 0; j < totals.size(); ++j)
                CHECK(totals[j].lower == supported[j]);
        }
    }
}

TEST_CASE("a partial fixpoint where no supported model exists") {
    ChoiceProgram p = parse_choice("{p; q} = 1 :- {p} != 1. p :- q.");
    auto s = p.signature();
    Pair gain = pr(s, ";p");
    for (OperatorKind kind : all_operator_kinds()) {
        std::vector<Pair> fps = fixpoints(kind, p, false);
        bool found = std::find(fps.begin(), fps.end(), gain) != fps.end();
        CHECK(found == (kind != OperatorKind::GZ));
    }
}

TEST_CASE("well-founded reachability for the free-choice program") {
    ChoiceProgram p = parse_choice("1 {p; q} 2.");
    auto s = p.signature();
    AtomSet y = set(s, "p,q");

    for (OperatorKind kind : all_operator_kinds()) {
        CCompleteResult lower = c_complete_lower(kind, p, y);
        CHECK(lower.sets == family(s, {"p", "q", "p,q"}));
        for (const auto& [mask, trace] : lower.traces)
            validate_trace(trace, [&](const AtomSet& z) {
                return ic_lower_unchecked(kind, p, Pair{z, y});
            });
        CHECK(complete_lower_stable(kind, p, y) == family(s, {"p", "q"}));
    }
}

TEST_CASE("unreachable fixpoints stay out of the constructive bound") {
    ChoiceProgram p = parse_choice("{p; q} = 2.");
    auto s = p.signature();
    CCompleteResult lower = c_complete_lower(OperatorKind::LPST, p, set(s, "p,q"));
    CHECK(lower.sets == family(s, {"p,q"}));
    CHECK(!lower.sets.contains(set(s, "p")));
}

TEST_CASE("deterministic programs reduce to least-fixpoint iteration") {
    ChoiceProgram p = parse_choice("a. b :- a.");
    auto s = p.signature();
    for (OperatorKind kind : all_operator_kinds()) {
        CCompleteResult lower = c_complete_lower(kind, p, set(s, "a,b"));
        CHECK(lower.sets == family(s, {"a,b"}));
    }
}

TEST_CASE("stable versus constructive stable on the free-choice program") {
    ChoiceProgram p = parse_choice("1 {p; q} 2.");
    auto s = p.signature();
    std::vector<Pair> minimal{pr(s, "p;p"), pr(s, "q;q")};
    std::vector<Pair> constructive{pr(s, "p;p"), pr(s, "q;q"), pr(s, "p,q;p,q")};
    for (OperatorKind kind : all_operator_kinds()) {
        CHECK(result_pairs(stable_fixpoints(kind, p, true)) == minimal);
        CHECK(result_pairs(c_stable_fixpoints(kind, p, true)) == constructive);
    }
    // The constructive extra pair is not ≤_t-minimal: witness of non-minimality.
    CHECK(leq_t(pr(s, "p;p"), pr(s, "p,q;p,q")));
}

TEST_CASE("constructive stable traces re-validate") {
    ChoiceProgram p = parse_choice("1 {p; q} 2.");
    for (OperatorKind kind : {OperatorKind::LPST, OperatorKind::MR, OperatorKind::ULT}) {
        StableResult result = c_stable_fixpoints(kind, p, false);
        CHECK(!result.pairs.empty());
        for (const auto& sp : result.pairs) {
            REQUIRE(sp.lower_trace.has_value());
            REQUIRE(sp.upper_trace.has_value());
            CHECK(sp.lower_trace->terminal() == sp.pair.lower);
            validate_trace(*sp.lower_trace, [&](const AtomSet& z) {
                return ic_lower_unchecked(kind, p, Pair{z, sp.pair.upper});
            });
        }
    }
}

TEST_CASE("GZ constructive semantics is restricted to total pairs") {
    ChoiceProgram p = parse_choice("1 {p; q} 2.");
    CHECK_THROWS_AS(c_complete_upper(OperatorKind::GZ, p, set(p.signature(), "p")),
                    SemanticError);
    CHECK_THROWS_AS(c_stable_fixpoints(OperatorKind::GZ, p, false), SemanticError);
    CHECK(c_stable_fixpoints(OperatorKind::GZ, p, true).pairs.size() == 3);
}

TEST_CASE("section-6 aggregate program is constructive stable for MR and ULT only") {
    ChoiceProgram p = parse_choice("{p; q} = 2 :- {p; q} != 1.");
    auto s = p.signature();
    Pair both = pr(s, "p,q;p,q");
    for (OperatorKind kind : all_operator_kinds()) {
        std::vector<Pair> pairs = result_pairs(c_stable_fixpoints(kind, p, true));
        bool found = std::find(pairs.begin(), pairs.end(), both) != pairs.end();
        CHECK(found == (kind == OperatorKind::MR || kind == OperatorKind::ULT));
    }
}

TEST_CASE("prefixpoint models for monotone-head programs") {
    ChoiceProgram mono = parse_choice("1 {p; q} :- r. r.");
    auto s = mono.signature();
    std::vector<AtomSet> expected;
    for (const auto& x : all_sets(s))
        if (is_model(x, mono)) expected.push_back(x);
    std::sort(expected.begin(), expected.end(),
              [](const AtomSet& a, const AtomSet& b) { return canonical_less(a, b); });
    CHECK(prefixpoint_models(mono) == expected);

    ChoiceProgram empty(s, {});
    CHECK(prefixpoint_models(empty).size() == 8);

    // Non-monotone heads break the correspondence and are refused.
    CHECK_THROWS_AS(prefixpoint_models(parse_choice("{p; q} = 1.")), SemanticError);
}

TEST_CASE("wfs_reach caps the state space") {
    ChoiceProgram p = parse_choice("1 {p; q; r}.");
    Limits tight;
    tight.max_states = 2;
    CHECK_THROWS_AS(
        c_complete_lower(OperatorKind::ULT, p, AtomSet::universe(p.signature()), tight),
        CapError);
}
