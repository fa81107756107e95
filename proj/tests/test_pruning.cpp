#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qad/pruning.hpp"
#include "qad/structure.hpp"
#include "test_support.hpp"

using namespace qad;
using test::enum_set;
using test::word_set;

namespace {

const int kX = 0;  // first-tape letter of the trivial builtin's relation
const int kY = 1;  // second-tape letter

// The trivial builtin's empty-letter relation recognizes x+y+. Its minimal
// recognizer has three states: start, the x block, the y block.
struct WorkedExample {
    QuasiAutomaticStructure s = builtin("trivial");
    const NivatBimorphism& r_eps = s.relations.at(kEpsilonRelation);
    Dfa w = minimize(determinize(r_eps.h()));
    int q0 = w.initial();
    int qx = *w.step(q0, kX);
    int qy = *w.step(qx, kY);
};

std::set<std::pair<Word, Word>> pair_set(const NivatBimorphism& bm, int bound) {
    auto pairs = bm.enumerate_pairs(bound);
    return {pairs.begin(), pairs.end()};
}

Nfa image_of(const NivatBimorphism& shape, const Nfa& inner_language, Tape tape) {
    NivatBimorphism view(shape.inner(), shape.outer(), shape.letters(), inner_language);
    return tape == Tape::first ? view.image_first() : view.image_second();
}

}  // namespace

TEST_CASE("silent_circuits on the worked example") {
    WorkedExample ex;
    REQUIRE(ex.w.num_states() == 3);

    // y loops at the final state and is silent on the first tape
    Nfa circ = silent_circuits(ex.w, ex.r_eps.letters(), ex.qy, Tape::first, 3);
    CHECK(enum_set(circ, 4) == word_set({{kY}, {kY, kY}, {kY, kY, kY}}));

    // x is not silent on the first tape, so the x loop does not count
    CHECK(is_empty(silent_circuits(ex.w, ex.r_eps.letters(), ex.qx, Tape::first, 3)));
    // no circuits at all around the start state
    CHECK(is_empty(silent_circuits(ex.w, ex.r_eps.letters(), ex.q0, Tape::first, 3)));
    CHECK(is_empty(silent_circuits(ex.w, ex.r_eps.letters(), ex.q0, Tape::second, 3)));
    // the length bound must be positive
    CHECK_THROWS_AS(silent_circuits(ex.w, ex.r_eps.letters(), ex.qy, Tape::first, 0),
                    std::invalid_argument);
}

TEST_CASE("debris_language on the worked example") {
    WorkedExample ex;

    // words whose run wraps a first-tape-silent circuit at the y block:
    // exactly x^i y^j with i >= 1, j >= 2
    Nfa debris = debris_language(ex.w, ex.r_eps.letters(), ex.qy, Tape::first, 3);
    std::set<Word> expect;
    for (int i = 1; i <= 5; ++i)
        for (int j = 2; i + j <= 6; ++j) {
            Word w(static_cast<size_t>(i), kX);
            w.insert(w.end(), static_cast<size_t>(j), kY);
            expect.insert(w);
        }
    CHECK(enum_set(debris, 6) == expect);

    // the x block mirrors it on the other tape: x^i y^j with i >= 2, j >= 1
    Nfa debris_x = debris_language(ex.w, ex.r_eps.letters(), ex.qx, Tape::second, 3);
    std::set<Word> expect_x;
    for (int i = 2; i <= 5; ++i)
        for (int j = 1; i + j <= 6; ++j) {
            Word w(static_cast<size_t>(i), kX);
            w.insert(w.end(), static_cast<size_t>(j), kY);
            expect_x.insert(w);
        }
    CHECK(enum_set(debris_x, 6) == expect_x);

    // no circuit at the start state, so nothing wraps there
    CHECK(is_empty(debris_language(ex.w, ex.r_eps.letters(), ex.q0, Tape::first, 3)));
}

TEST_CASE("prune on the worked example") {
    WorkedExample ex;
    PruningResult res = prune(ex.s.dictionary, ex.r_eps);

    CHECK(res.k == 3);
    CHECK(language_equal(res.dictionary_k, word_automaton(ex.s.dictionary.alphabet(), {0})));
    CHECK(pair_set(res.h_pruned, 8) == std::set<std::pair<Word, Word>>{{{0}, {0}}});

    REQUIRE(res.per_state.size() == 3);
    // second-tape images of the y-block debris are the removed words a^(>=2)
    Nfa removed_second = image_of(ex.r_eps, res.per_state[static_cast<size_t>(ex.qy)].first_tape,
                                  Tape::second);
    Nfa a_two_up = concat(word_automaton(ex.s.dictionary.alphabet(), {0}),
                          plus_closure(word_automaton(ex.s.dictionary.alphabet(), {0})));
    CHECK(language_equal(removed_second, a_two_up));
    Nfa removed_first = image_of(ex.r_eps, res.per_state[static_cast<size_t>(ex.qx)].second_tape,
                                 Tape::first);
    CHECK(language_equal(removed_first, a_two_up));
    // nothing wraps at the start state
    CHECK(is_empty(res.per_state[static_cast<size_t>(ex.q0)].first_tape));
    CHECK(is_empty(res.per_state[static_cast<size_t>(ex.q0)].second_tape));
}

TEST_CASE("prune keeps synchronous structures whole") {
    // the z builtins consume both tapes alternately, so no silent circuits
    for (const char* name : {"z_shortlex", "free_group_rank1"}) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        PruningResult res = prune(s.dictionary, s.relations.at(kEpsilonRelation));
        CHECK(res.k == 9);
        CHECK(language_equal(res.dictionary_k, s.dictionary));
        for (const auto& d : res.per_state) {
            CHECK(is_empty(d.first_tape));
            CHECK(is_empty(d.second_tape));
        }
    }
}

TEST_CASE("pruned relation equals the restriction to K x K") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        PruningResult res = prune(s.dictionary, s.relations.at(kEpsilonRelation));
        std::set<std::pair<Word, Word>> expect;
        for (const auto& p : s.relations.at(kEpsilonRelation).enumerate_pairs(8))
            if (accepts(res.dictionary_k, p.first) && accepts(res.dictionary_k, p.second))
                expect.insert(p);
        CHECK(pair_set(res.h_pruned, 8) == expect);
    }
}

TEST_CASE("pruning is idempotent and shrinking") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        PruningResult res = prune(s.dictionary, s.relations.at(kEpsilonRelation));
        CHECK(is_sublanguage(res.dictionary_k, s.dictionary));
        PruningResult again = prune(res.dictionary_k, res.h_pruned);
        CHECK(language_equal(again.dictionary_k, res.dictionary_k));
    }
}

TEST_CASE("prune rejects a dictionary that is all debris") {
    // every word of length >= 2 can wrap a silent circuit of the full
    // relation, so a dictionary of only such words prunes to nothing
    QuasiAutomaticStructure s = builtin("trivial");
    Nfa just_aa = word_automaton(s.dictionary.alphabet(), {0, 0});
    CHECK_THROWS_AS(prune(just_aa, s.relations.at(kEpsilonRelation)), std::runtime_error);
}

TEST_CASE("verify_factor_property") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        CHECK(verify_factor_property(prune(s.dictionary, s.relations.at(kEpsilonRelation))));
    }

    // a planted relation with a run of k+1 letters silent on the first tape
    QuasiAutomaticStructure s = builtin("trivial");
    const NivatBimorphism& shape = s.relations.at(kEpsilonRelation);
    Word xyyyy{kX, kY, kY, kY, kY};
    PruningResult bad{3, s.dictionary,
                      NivatBimorphism(shape.inner(), shape.outer(), shape.letters(),
                                      word_automaton(shape.inner(), xyyyy)),
                      {}};
    CHECK_FALSE(verify_factor_property(bad));
    // one letter shorter is within the bound
    Word xyyy{kX, kY, kY, kY};
    PruningResult ok{3, s.dictionary,
                     NivatBimorphism(shape.inner(), shape.outer(), shape.letters(),
                                     word_automaton(shape.inner(), xyyy)),
                     {}};
    CHECK(verify_factor_property(ok));
    // an empty relation has no inner words at all
    PruningResult empty_res{3, s.dictionary,
                            NivatBimorphism(shape.inner(), shape.outer(), shape.letters(),
                                            empty_language(shape.inner())),
                            {}};
    CHECK(verify_factor_property(empty_res));
}

TEST_CASE("verify_k_dictionary") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        PruningResult res = prune(s.dictionary, s.relations.at(kEpsilonRelation));
        CheckReport rep = verify_k_dictionary(res, s.oracle, 3, 8);
        CHECK(rep.pass);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.checked > 0);
    }
}
