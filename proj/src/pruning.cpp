#include "qad/pruning.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "qad/structure.hpp"

namespace qad {

namespace {

bool silent_on(const TapeLetter& letter, Tape tape) {
    // A letter is silent on the tape it does not emit on.
    return letter.tape != tape;
}

// w with a chosen initial state and final set, over the same states.
Nfa reanchor(const Dfa& w, int initial, std::vector<int> finals) {
    return Nfa(w.alphabet(), w.num_states(), initial, std::move(finals), w.nfa().transitions());
}

}  // namespace

Nfa silent_circuits(const Dfa& w, const std::vector<TapeLetter>& letters, int q, Tape tape,
                    int k) {
    if (q < 0 || q >= w.num_states())
        throw std::invalid_argument("silent_circuits: state out of range");
    if (k < 1)
        throw std::invalid_argument("silent_circuits: bound must be positive");
    // Layered product of w with a step counter 0..k, silent letters only.
    // State (s, c) gets id c * |Q| + s; only reachable layers matter but the
    // automaton is small enough to build densely and trim.
    const int n = w.num_states();
    auto id = [n](int s, int c) { return c * n + s; };
    std::vector<Transition> trans;
    for (const auto& t : w.nfa().transitions()) {
        if (!silent_on(letters[static_cast<size_t>(t.sym)], tape))
            continue;
        for (int c = 0; c < k; ++c)
            trans.push_back({id(t.from, c), t.sym, id(t.to, c + 1)});
    }
    std::vector<int> finals;
    for (int c = 1; c <= k; ++c)
        finals.push_back(id(q, c));
    return trim(Nfa(w.alphabet(), n * (k + 1), id(q, 0), std::move(finals), std::move(trans)));
}

Nfa debris_language(const Dfa& w, const std::vector<TapeLetter>& letters, int q, Tape tape,
                    int k) {
    Nfa circuits = silent_circuits(w, letters, q, tape, k);
    if (is_empty(circuits))
        return empty_language(w.alphabet());
    // Prefixes into q and suffixes out of q may be empty words (q may be the
    // initial state or a final state); the circuit itself is nonempty.
    Nfa prefix = reanchor(w, w.initial(), {q});
    Nfa suffix = reanchor(w, q, w.nfa().finals());
    return trim(concat(concat(prefix, circuits), suffix));
}

PruningResult prune(const Nfa& dictionary, const NivatBimorphism& r_eps) {
    if (!(dictionary.alphabet() == r_eps.outer()))
        throw std::invalid_argument("prune: dictionary alphabet differs from relation outer");
    Dfa w = minimize(determinize(r_eps.h()));
    const int k = w.num_states();
    const auto& letters = r_eps.letters();

    PruningResult res{k, dictionary, r_eps, {}};
    Nfa removed = empty_language(dictionary.alphabet());
    bool any_removed = false;
    for (int q = 0; q < k; ++q) {
        Nfa first = debris_language(w, letters, q, Tape::first, k);
        Nfa second = debris_language(w, letters, q, Tape::second, k);
        // Words opposite a first-tape-silent circuit are reached through
        // their second-tape image, and vice versa.
        if (!is_empty(first)) {
            NivatBimorphism view(r_eps.inner(), r_eps.outer(), letters, first);
            removed = unite(removed, view.image_second());
            any_removed = true;
        }
        if (!is_empty(second)) {
            NivatBimorphism view(r_eps.inner(), r_eps.outer(), letters, second);
            removed = unite(removed, view.image_first());
            any_removed = true;
        }
        res.per_state.push_back({std::move(first), std::move(second)});
    }

    Nfa k_lang = any_removed ? trim(difference(dictionary, removed)) : trim(dictionary);
    if (is_empty(k_lang)) {
        std::string msg = "prune: every dictionary word is debris; non-empty debris at states";
        for (int q = 0; q < k; ++q)
            if (!is_empty(res.per_state[static_cast<size_t>(q)].first_tape) ||
                !is_empty(res.per_state[static_cast<size_t>(q)].second_tape))
                msg += " " + std::to_string(q);
        throw std::runtime_error(msg);
    }
    res.dictionary_k = k_lang;

    NivatBimorphism recognizer(r_eps.inner(), r_eps.outer(), letters, w.nfa());
    res.h_pruned = recognizer.restrict_ranges(k_lang, k_lang);
    return res;
}

bool verify_factor_property(const PruningResult& res) {
    const auto& bm = res.h_pruned;
    const auto& inner = bm.inner();
    const int k = res.k;
    for (Tape tape : {Tape::first, Tape::second}) {
        // Pattern: anything, then k+1 letters silent on `tape`, then anything.
        std::vector<Transition> trans;
        for (const auto& sym : inner) {
            trans.push_back({0, sym.id, 0});
            trans.push_back({k + 1, sym.id, k + 1});
            if (silent_on(bm.letters()[static_cast<size_t>(sym.id)], tape))
                for (int c = 0; c <= k; ++c)
                    trans.push_back({c, sym.id, c + 1});
        }
        Nfa pattern(inner, k + 2, 0, {k + 1}, std::move(trans));
        if (!is_empty(intersect(bm.h(), pattern)))
            return false;
    }
    return true;
}

CheckReport verify_k_dictionary(const PruningResult& res, const GroupOracle& oracle, int n,
                                int word_cap) {
    CheckReport report = check_onto(oracle, res.dictionary_k, n, word_cap);
    report.name = "k_dictionary";
    return report;
}

}  // namespace qad
