#include "choral/program.hpp"

#include <algorithm>

namespace choral {

namespace {

void require_atom_signature(const ChoiceAtom& atom, const SignaturePtr& sig) {
    if (atom.signature() != sig)
        throw SemanticError("rule component belongs to a different signature");
}

} // namespace

std::string ChoiceRule::to_string() const {
    std::string out = head.to_string();
    if (!body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) out += ", ";
            out += body[i].to_string();
        }
    }
    return out + ".";
}

ChoiceProgram::ChoiceProgram(SignaturePtr sig, std::vector<ChoiceRule> rules)
    : sig_(std::move(sig)) {
    if (!sig_) throw SemanticError("program requires a signature");
    for (const auto& rule : rules) {
        require_atom_signature(rule.head, sig_);
        for (const auto& atom : rule.body) require_atom_signature(atom, sig_);
        if (std::find(rules_.begin(), rules_.end(), rule) == rules_.end())
            rules_.push_back(rule);
    }
}

std::string ChoiceProgram::to_string() const {
    std::string out;
    for (const auto& rule : rules_) {
        out += rule.to_string();
        out += "\n";
    }
    return out;
}

bool is_normal(const ChoiceProgram& p, const Limits& limits) {
    for (const auto& rule : p.rules())
        for (const auto& atom : rule.body)
            if (!literal_shape(atom, limits)) return false;
    return true;
}

bool is_aggregate(const ChoiceProgram& p) {
    for (const auto& rule : p.rules())
        if (!atom_shape(rule.head)) return false;
    return true;
}

bool is_normal_logic(const ChoiceProgram& p, const Limits& limits) {
    return is_aggregate(p) && is_normal(p, limits);
}

std::string DisjunctiveRule::to_string() const {
    std::string out;
    auto heads = head.names();
    for (std::size_t i = 0; i < heads.size(); ++i) {
        if (i) out += " | ";
        out += heads[i];
    }
    bool first = true;
    for (const auto& name : pos.names()) {
        out += first ? " :- " : ", ";
        out += name;
        first = false;
    }
    for (const auto& name : neg.names()) {
        out += first ? " :- not " : ", not ";
        out += name;
        first = false;
    }
    return out + ".";
}

DisjunctiveProgram::DisjunctiveProgram(SignaturePtr sig, std::vector<DisjunctiveRule> rules)
    : sig_(std::move(sig)) {
    if (!sig_) throw SemanticError("program requires a signature");
    for (const auto& rule : rules) {
        if (rule.head.signature() != sig_ || rule.pos.signature() != sig_ ||
            rule.neg.signature() != sig_)
            throw SemanticError("rule component belongs to a different signature");
        if (rule.head.is_empty())
            throw SemanticError("disjunctive rule needs a non-empty head");
        if (std::find(rules_.begin(), rules_.end(), rule) == rules_.end())
            rules_.push_back(rule);
    }
}

std::string DisjunctiveProgram::to_string() const {
    std::string out;
    for (const auto& rule : rules_) {
        out += rule.to_string();
        out += "\n";
    }
    return out;
}

} // namespace choral
