#ifndef CHORAL_GROUNDEDNESS_HPP
#define CHORAL_GROUNDEDNESS_HPP

#include <map>
#include <optional>
#include <vector>

#include "choral/semantics.hpp"

namespace choral {

enum class GroundNotion { D, S, A, Erdem };
const char* to_string(GroundNotion notion);
GroundNotion ground_notion_from_string(const std::string& name);

struct GroundednessReport {
    GroundNotion notion;
    bool holds;
    /// Level map κ on the atoms of x (minimal levels), when holds.
    std::map<int, int> levels;
    /// Atoms of x that never became derivable, when not.
    std::optional<AtomSet> blocking;
};

/// z is an upper-trigger for r: z ⊆ upper and every w ∈ [z, upper]
/// satisfies every body atom of r.
bool is_trigger(const AtomSet& z, const AtomSet& upper, const ChoiceRule& r,
                const Limits& limits = default_limits());

/// Least-level saturation deciders for the three groundedness notions.
GroundednessReport is_d_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits = default_limits());
GroundednessReport is_s_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits = default_limits());
GroundednessReport is_a_grounded(const AtomSet& x, const ChoiceProgram& p,
                                 const Limits& limits = default_limits());
GroundednessReport check_grounded(GroundNotion notion, const AtomSet& x,
                                  const ChoiceProgram& p,
                                  const Limits& limits = default_limits());

/// Groundedness in the sense of Erdem & Lifschitz: a ranking of x that
/// descends along the positive body atoms. Normal logic programs only.
GroundednessReport erdem_grounded(const AtomSet& x, const ChoiceProgram& p,
                                  const Limits& limits = default_limits());

/// Exhaustive search over all level maps κ: x → {0..|x|−1}, testing the
/// notion's defining condition literally. |x| ≤ 6.
GroundednessReport grounded_bruteforce(GroundNotion notion, const AtomSet& x,
                                       const ChoiceProgram& p,
                                       const Limits& limits = default_limits());

/// Groundedness of every c-stable fixpoint of the given operator,
/// evaluating all three notions on each bound.
struct GroundednessTableRow {
    Pair pair;
    bool lower_d, lower_s, lower_a;
    bool upper_d, upper_s, upper_a;
};
std::vector<GroundednessTableRow> groundedness_of_cstable(OperatorKind kind,
                                                          const ChoiceProgram& p,
                                                          const Limits& limits = default_limits());

} // namespace choral

#endif
