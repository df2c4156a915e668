#ifndef CHORAL_PARSER_HPP
#define CHORAL_PARSER_HPP

#include <string>
#include <variant>

#include "choral/program.hpp"

namespace choral {

/// A parsed program: either a choice program or a disjunctive logic
/// program. Files mixing "|" heads with choice-atom syntax are rejected.
using ParsedProgram = std::variant<ChoiceProgram, DisjunctiveProgram>;

/// Parses program text. Grammar (comments start with '%'):
///   rule     := head ":-" body "." | head "." ;
///   body     := catom ("," catom)* ;
///   head     := catom | atom ("|" atom)+ ;
///   catom    := atom | "not" atom | card | count | explicit ;
///   card     := [nat] "{" atom (";" atom)* "}" [nat] ;
///   count    := "{" atom (";" atom)* "}" ("="|"!=") nat ;
///   explicit := "choice" "(" "[" atoms "]" "," "[" subsetlist "]" ")" ;
/// Identifiers match [a-z][A-Za-z0-9_]*.
ParsedProgram parse_program(const std::string& text,
                            const Limits& limits = default_limits());

/// Canonical text form; parse ∘ print is the identity on parsed programs.
std::string print_program(const ChoiceProgram& p);
std::string print_program(const DisjunctiveProgram& p);
std::string print_program(const ParsedProgram& p);

/// Comma-separated atom list ("p,q"; empty string = ∅) against a signature.
AtomSet parse_atom_list(const SignaturePtr& sig, const std::string& text);

/// "lower;upper" with comma-separated atoms on each side, e.g. "p;p,q".
Pair parse_pair(const SignaturePtr& sig, const std::string& text);

} // namespace choral

#endif
