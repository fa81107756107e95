// Dictionary pruning: remove every word that can appear opposite a tape-silent
// circuit of the empty-letter relation's recognizer. The surviving dictionary
// K keeps the represented set intact while its relation recognizer gains the
// bounded-silent-factor property that the length and departure bounds need.
#ifndef QAD_PRUNING_HPP
#define QAD_PRUNING_HPP

#include <vector>

#include "qad/bimorphism.hpp"
#include "qad/group.hpp"
#include "qad/report.hpp"

namespace qad {

struct PruningResult {
    // State count of the minimized deterministic recognizer of the relation's
    // inner language; also the circuit-length bound used for debris.
    int k = 0;
    Nfa dictionary_k;
    NivatBimorphism h_pruned;
    // Per recognizer state: inner words removed because of circuits silent on
    // the first tape (debris_first, removed through their second-tape image)
    // and on the second tape (debris_second, removed through the first-tape
    // image).
    struct Debris {
        Nfa first_tape;
        Nfa second_tape;
    };
    std::vector<Debris> per_state;
};

// Nonempty circuits around q of length <= k whose letters are all silent on
// the given tape.
Nfa silent_circuits(const Dfa& w, const std::vector<TapeLetter>& letters, int q, Tape tape, int k);

// Accepted inner words of w whose run passes q and wraps a silent circuit
// there: (words into q) . (silent circuits at q) . (words from q to a final).
Nfa debris_language(const Dfa& w, const std::vector<TapeLetter>& letters, int q, Tape tape, int k);

// Runs the whole construction for one dictionary and its empty-letter
// relation. Throws std::runtime_error when everything is debris and K would
// be empty.
PruningResult prune(const Nfa& dictionary, const NivatBimorphism& r_eps);

// Exact check: no accepted inner word of the pruned relation contains k+1
// consecutive letters silent on one tape (automaton intersection, not
// enumeration).
bool verify_factor_property(const PruningResult& res);

// Desk-scale evidence that K still represents every element of ball(n).
CheckReport verify_k_dictionary(const PruningResult& res, const GroupOracle& oracle, int n,
                                int word_cap);

}  // namespace qad

#endif
