#include "choral/json_io.hpp"

namespace choral {

using nlohmann::json;

json to_json(const AtomSet& x) {
    return json(x.names());
}

json to_json(const AtomSetFamily& f) {
    json out = json::array();
    for (std::uint64_t mask : f.masks()) out.push_back(to_json(AtomSet(f.signature(), mask)));
    return out;
}

json to_json(const Pair& pair) {
    return json{{"lower", to_json(pair.lower)}, {"upper", to_json(pair.upper)}};
}

json to_json(const ChoiceAtom& atom) {
    switch (atom.kind()) {
        case SatKind::PosLiteral:
        case SatKind::NegLiteral:
            return json{{"kind", "literal"},
                        {"atom", atom.dom().names().front()},
                        {"positive", atom.kind() == SatKind::PosLiteral}};
        case SatKind::Cardinality: {
            json out{{"kind", "cardinality"},
                     {"dom", to_json(atom.dom())},
                     {"lo", atom.lo()}};
            out["hi"] = atom.hi() ? json(*atom.hi()) : json(nullptr);
            return out;
        }
        case SatKind::CountEq:
            return json{{"kind", "count_eq"}, {"dom", to_json(atom.dom())}, {"k", atom.k()}};
        case SatKind::CountNeq:
            return json{{"kind", "count_neq"}, {"dom", to_json(atom.dom())}, {"k", atom.k()}};
        case SatKind::Extensional: {
            json sats = json::array();
            for (std::uint64_t mask : atom.sat_masks())
                sats.push_back(to_json(AtomSet(atom.signature(), mask)));
            return json{{"kind", "explicit"},
                        {"dom", to_json(atom.dom())},
                        {"satisfiers", sats}};
        }
    }
    throw SemanticError("unreachable choice-atom kind");
}

json to_json(const ChoiceRule& rule) {
    json body = json::array();
    for (const auto& atom : rule.body) body.push_back(to_json(atom));
    return json{{"head", to_json(rule.head)}, {"body", body}};
}

json to_json(const ChoiceProgram& p) {
    json rules = json::array();
    for (const auto& rule : p.rules()) rules.push_back(to_json(rule));
    return json{{"atoms", p.signature()->names()}, {"rules", rules}};
}

json to_json(const DisjunctiveRule& rule) {
    return json{{"head", to_json(rule.head)},
                {"pos", to_json(rule.pos)},
                {"neg", to_json(rule.neg)}};
}

json to_json(const DisjunctiveProgram& p) {
    json rules = json::array();
    for (const auto& rule : p.rules()) rules.push_back(to_json(rule));
    return json{{"atoms", p.signature()->names()}, {"rules", rules}};
}

json to_json(const NdaoOutput& out) {
    return json{{"lower", to_json(out.lower)}, {"upper", to_json(out.upper)}};
}

json to_json(const WfsTrace& trace) {
    json out = json::array();
    for (const auto& step : trace.steps) out.push_back(to_json(step));
    return out;
}

json to_json(const StableResult& result) {
    json pairs = json::array();
    for (const auto& sp : result.pairs) {
        json entry{{"pair", to_json(sp.pair)}};
        entry["lower_trace"] = sp.lower_trace ? to_json(*sp.lower_trace) : json(nullptr);
        entry["upper_trace"] = sp.upper_trace ? to_json(*sp.upper_trace) : json(nullptr);
        pairs.push_back(entry);
    }
    return json{{"operator", to_string(result.kind)},
                {"flavor", to_string(result.flavor)},
                {"pairs", pairs}};
}

json to_json(const GroundednessReport& report) {
    json out{{"notion", to_string(report.notion)}, {"holds", report.holds}};
    // Levels are keyed by atom id; only meaningful when the check holds.
    json levels = json::object();
    if (report.holds) {
        for (const auto& [id, level] : report.levels) levels[std::to_string(id)] = level;
    }
    out["levels"] = levels;
    out["blocking"] = report.blocking ? to_json(*report.blocking) : json(nullptr);
    return out;
}

namespace {

ChoiceAtom atom_from_json(const json& j, const SignaturePtr& sig) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "literal")
        return ChoiceAtom::literal(sig, sig->require(j.at("atom").get<std::string>()),
                                   j.at("positive").get<bool>());
    AtomSet dom = AtomSet::of(sig, j.at("dom").get<std::vector<std::string>>());
    if (kind == "cardinality") {
        std::optional<unsigned> hi;
        if (!j.at("hi").is_null()) hi = j.at("hi").get<unsigned>();
        return ChoiceAtom::cardinality(dom, j.at("lo").get<unsigned>(), hi);
    }
    if (kind == "count_eq") return ChoiceAtom::count_eq(dom, j.at("k").get<unsigned>());
    if (kind == "count_neq") return ChoiceAtom::count_neq(dom, j.at("k").get<unsigned>());
    if (kind == "explicit") {
        std::vector<AtomSet> satisfiers;
        for (const auto& s : j.at("satisfiers"))
            satisfiers.push_back(AtomSet::of(sig, s.get<std::vector<std::string>>()));
        return ChoiceAtom::extensional(dom, satisfiers);
    }
    throw SemanticError("unknown choice-atom kind '" + kind + "' in JSON input");
}

SignaturePtr signature_from_json(const json& j) {
    return Signature::make(j.at("atoms").get<std::vector<std::string>>());
}

} // namespace

ChoiceProgram choice_program_from_json(const json& j) {
    SignaturePtr sig = signature_from_json(j);
    std::vector<ChoiceRule> rules;
    for (const auto& rj : j.at("rules")) {
        std::vector<ChoiceAtom> body;
        for (const auto& aj : rj.at("body")) body.push_back(atom_from_json(aj, sig));
        rules.push_back(ChoiceRule{atom_from_json(rj.at("head"), sig), std::move(body)});
    }
    return ChoiceProgram(sig, std::move(rules));
}

DisjunctiveProgram disjunctive_program_from_json(const json& j) {
    SignaturePtr sig = signature_from_json(j);
    std::vector<DisjunctiveRule> rules;
    for (const auto& rj : j.at("rules")) {
        rules.push_back(DisjunctiveRule{
            AtomSet::of(sig, rj.at("head").get<std::vector<std::string>>()),
            AtomSet::of(sig, rj.at("pos").get<std::vector<std::string>>()),
            AtomSet::of(sig, rj.at("neg").get<std::vector<std::string>>())});
    }
    return DisjunctiveProgram(sig, std::move(rules));
}

} // namespace choral
