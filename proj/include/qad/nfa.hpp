// Epsilon-free finite automata over dense integer states, plus the boolean
// and normal-form operations the rest of the library is built on. Missing
// transitions mean rejection; determinism is a property, not a requirement.
#ifndef QAD_NFA_HPP
#define QAD_NFA_HPP

#include <compare>
#include <optional>
#include <vector>

#include "qad/alphabet.hpp"

namespace qad {

struct Transition {
    int from = 0;
    int sym = 0;
    int to = 0;

    auto operator<=>(const Transition&) const = default;
};

class Nfa {
  public:
    // Validates ranges, sorts and dedups finals/transitions.
    Nfa(Alphabet alphabet, int num_states, int initial, std::vector<int> finals,
        std::vector<Transition> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    int initial() const { return initial_; }
    const std::vector<int>& finals() const { return finals_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    bool is_final(int q) const { return final_mask_[static_cast<size_t>(q)]; }

    // Per-state outgoing (sym, to) lists, sorted.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  private:
    Alphabet alphabet_;
    int num_states_ = 1;
    int initial_ = 0;
    std::vector<int> finals_;
    std::vector<bool> final_mask_;
    std::vector<Transition> transitions_;
};

// A deterministic automaton: at most one transition per (state, symbol).
// Wraps the witnessing Nfa; construction checks determinism.
class Dfa {
  public:
    explicit Dfa(Nfa nfa);

    const Nfa& nfa() const { return nfa_; }
    const Alphabet& alphabet() const { return nfa_.alphabet(); }
    int num_states() const { return nfa_.num_states(); }
    int initial() const { return nfa_.initial(); }
    bool is_final(int q) const { return nfa_.is_final(q); }
    std::optional<int> step(int q, int sym) const;

  private:
    Nfa nfa_;
    std::vector<int> table_;  // num_states x |alphabet|, -1 where undefined
};

// Helper for constructions that want epsilon moves internally; eliminate()
// produces an equivalent epsilon-free Nfa over the same states.
struct EpsNfa {
    Alphabet alphabet;
    int num_states = 1;
    int initial = 0;
    std::vector<int> finals;
    std::vector<Transition> transitions;
    std::vector<std::pair<int, int>> eps;  // (from, to)

    Nfa eliminate() const;
};

// All binary operations require equal alphabets and throw std::invalid_argument
// otherwise.
Nfa unite(const Nfa& x, const Nfa& y);
Nfa concat(const Nfa& x, const Nfa& y);
Nfa intersect(const Nfa& x, const Nfa& y);
// Words of x not accepted by y (y is determinized and complemented inside).
Nfa difference(const Nfa& x, const Nfa& y);

// Subset construction, reachable subsets only; result has no sink state.
Dfa determinize(const Nfa& x);
// Canonical minimal partial DFA: trims, then merges Myhill-Nerode classes.
Dfa minimize(const Dfa& x);
// Keeps exactly the states lying on some accepting path (initial is kept even
// when the language is empty).
Nfa trim(const Nfa& x);

bool is_empty(const Nfa& x);
bool accepts(const Nfa& x, const Word& w);
// All accepted words of length <= max_len, in shortlex order. Includes the
// empty word when accepted.
std::vector<Word> enumerate(const Nfa& x, int max_len);

// Small constructors used by dictionaries and tests.
Nfa empty_language(const Alphabet& alphabet);
Nfa word_automaton(const Alphabet& alphabet, const Word& w);
Nfa from_words(const Alphabet& alphabet, const std::vector<Word>& words);
// Kleene plus (one or more repetitions).
Nfa plus_closure(const Nfa& x);

bool is_sublanguage(const Nfa& x, const Nfa& y);
bool language_equal(const Nfa& x, const Nfa& y);

}  // namespace qad

#endif
