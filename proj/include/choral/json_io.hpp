#ifndef CHORAL_JSON_IO_HPP
#define CHORAL_JSON_IO_HPP

#include <json.hpp>

#include "choral/groundedness.hpp"
#include "choral/parser.hpp"

namespace choral {

/// Canonical JSON forms: atom sets as sorted name arrays, families as
/// arrays of arrays, pairs as {"lower": […], "upper": […]}. Byte-stable
/// across runs for identical inputs.
nlohmann::json to_json(const AtomSet& x);
nlohmann::json to_json(const AtomSetFamily& f);
nlohmann::json to_json(const Pair& pair);
nlohmann::json to_json(const ChoiceAtom& atom);
nlohmann::json to_json(const ChoiceRule& rule);
nlohmann::json to_json(const ChoiceProgram& p);
nlohmann::json to_json(const DisjunctiveRule& rule);
nlohmann::json to_json(const DisjunctiveProgram& p);
nlohmann::json to_json(const NdaoOutput& out);
nlohmann::json to_json(const WfsTrace& trace);
nlohmann::json to_json(const StableResult& result);
nlohmann::json to_json(const GroundednessReport& report);

ChoiceProgram choice_program_from_json(const nlohmann::json& j);
DisjunctiveProgram disjunctive_program_from_json(const nlohmann::json& j);

} // namespace choral

#endif
