// Rational relations in Nivat form: an automaton over an inner alphabet B
// whose letters each emit exactly one payload symbol on exactly one of two
// tapes. The represented relation is the set of (first tape, second tape)
// image pairs of accepted inner words.
#ifndef QAD_BIMORPHISM_HPP
#define QAD_BIMORPHISM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qad/nfa.hpp"

namespace qad {

enum class Tape { first, second };

// One inner letter: emits `payload` (an outer-alphabet symbol) on `tape` and
// is silent on the other tape. The tape assignment is structural, so neither
// tape-ambiguous nor fully silent letters can exist.
struct TapeLetter {
    int symbol = 0;   // inner alphabet id
    Tape tape = Tape::first;
    int payload = 0;  // outer alphabet id
};

struct PairTransition {
    int from = 0;
    std::optional<int> first;   // outer symbol consumed on tape one, if any
    std::optional<int> second;  // outer symbol consumed on tape two, if any
    int to = 0;
};

class NivatBimorphism {
  public:
    NivatBimorphism(Alphabet inner, Alphabet outer, std::vector<TapeLetter> letters, Nfa h);

    // Builds Nivat form from a two-tape transition table. Transitions that
    // consume on both tapes are split through a fresh intermediate state;
    // inner letters are shared per (tape, payload) and named after the
    // payload with a tape suffix.
    static NivatBimorphism from_pair_transitions(const Alphabet& outer, int num_states,
                                                 int initial, const std::vector<int>& finals,
                                                 const std::vector<PairTransition>& transitions);

    const Alphabet& inner() const { return inner_; }
    const Alphabet& outer() const { return outer_; }
    const std::vector<TapeLetter>& letters() const { return letters_; }
    const Nfa& h() const { return h_; }

    // Tape images of an inner word.
    std::pair<Word, Word> eval_word(const Word& inner_word) const;

    // All relation pairs arising from inner words of length <= max_b_len,
    // deduplicated, ordered shortlex by first then second component.
    std::vector<std::pair<Word, Word>> enumerate_pairs(int max_b_len) const;

    // Exact membership of (u, v): position-tracking product of h with the two
    // words, no enumeration involved.
    bool contains_pair(const Word& u, const Word& v) const;

    // Projections onto one tape, as automata over the outer alphabet. May
    // accept the empty word.
    Nfa image_first() const;
    Nfa image_second() const;

    // Same letters, inner automaton restricted to words whose first-tape
    // image lies in ku and second-tape image in kv.
    NivatBimorphism restrict_ranges(const Nfa& ku, const Nfa& kv) const;

  private:
    Alphabet inner_;
    Alphabet outer_;
    std::vector<TapeLetter> letters_;  // indexed by inner symbol id
    Nfa h_;

    Nfa image(Tape tape) const;
};

}  // namespace qad

#endif
