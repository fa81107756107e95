// A dictionary automaton together with a group oracle and one rational
// relation per generator (plus one for the empty letter), each in Nivat form.
#ifndef QAD_STRUCTURE_HPP
#define QAD_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "qad/bimorphism.hpp"
#include "qad/group.hpp"
#include "qad/report.hpp"

namespace qad {

// Relation map key for the empty-letter relation; generator relations use
// their symbol ids.
inline constexpr int kEpsilonRelation = -1;

struct QuasiAutomaticStructure {
    GroupOracle oracle;
    Nfa dictionary;
    std::map<int, NivatBimorphism> relations;

    // Throws std::invalid_argument when a relation is missing, uses a foreign
    // outer alphabet, or the dictionary alphabet differs from the oracle's.
    void check_well_formed() const;

    std::string relation_name(int key) const;
};

// Desk-scale two-sided validation. Soundness: every enumerated relation pair
// within the length bound lies in L x L and relates equivalent elements.
// Completeness: every equivalent pair of dictionary words within the bound is
// accepted by the corresponding relation.
ValidationReport validate(const QuasiAutomaticStructure& s, int max_len);

// Does every group element of norm <= n have a dictionary representative of
// length <= word_cap? A miss is reported as a failure but flagged
// inconclusive: a representative may simply be longer than the cap.
CheckReport check_onto(const GroupOracle& oracle, const Nfa& dictionary, int n, int word_cap);
CheckReport check_onto(const QuasiAutomaticStructure& s, int n, int word_cap);

// Built-in example structures: "trivial", "z_shortlex", "z2_table",
// "free_group_rank1".
QuasiAutomaticStructure builtin(const std::string& name);
std::vector<std::string> builtin_names();

// Replaces the dictionary by K (which must be a sublanguage of it) and
// restricts every relation to K x K. Throws on an empty K.
QuasiAutomaticStructure restrict_to(const QuasiAutomaticStructure& s, const Nfa& k);

}  // namespace qad

#endif
