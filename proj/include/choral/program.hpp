#ifndef CHORAL_PROGRAM_HPP
#define CHORAL_PROGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "choral/choice_atom.hpp"

namespace choral {

/// head ← body, all components choice atoms. Empty body = fact.
struct ChoiceRule {
    ChoiceAtom head;
    std::vector<ChoiceAtom> body;

    friend bool operator==(const ChoiceRule& a, const ChoiceRule& b) {
        return a.head == b.head && a.body == b.body;
    }
    std::string to_string() const;
};

/// A set of choice rules over a shared signature. Duplicate rules are
/// removed at construction; rule order is preserved for diagnostics.
class ChoiceProgram {
public:
    ChoiceProgram(SignaturePtr sig, std::vector<ChoiceRule> rules);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<ChoiceRule>& rules() const { return rules_; }

    std::string to_string() const;

private:
    SignaturePtr sig_;
    std::vector<ChoiceRule> rules_;
};

/// Every body element is (extensionally) a positive or negative literal.
bool is_normal(const ChoiceProgram& p, const Limits& limits = default_limits());

/// Every head is an atom.
bool is_aggregate(const ChoiceProgram& p);

/// Normal and aggregate: rules a ← a_1,…,a_n, ¬b_1,…,¬b_m.
bool is_normal_logic(const ChoiceProgram& p, const Limits& limits = default_limits());

/// ⋁Δ ← ⋀pos ∧ ⋀¬neg with Δ non-empty.
struct DisjunctiveRule {
    AtomSet head;  // non-empty
    AtomSet pos;
    AtomSet neg;

    friend bool operator==(const DisjunctiveRule& a, const DisjunctiveRule& b) {
        return a.head == b.head && a.pos == b.pos && a.neg == b.neg;
    }
    std::string to_string() const;
};

class DisjunctiveProgram {
public:
    DisjunctiveProgram(SignaturePtr sig, std::vector<DisjunctiveRule> rules);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<DisjunctiveRule>& rules() const { return rules_; }

    std::string to_string() const;

private:
    SignaturePtr sig_;
    std::vector<DisjunctiveRule> rules_;
};

} // namespace choral

#endif
