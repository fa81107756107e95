#include <stdexcept>
#include <string>

#include "doctest.h"
#include "qad/departure.hpp"
#include "qad/structure.hpp"
#include "test_support.hpp"

using namespace qad;

namespace {

PruningResult prune_builtin(const std::string& name) {
    QuasiAutomaticStructure s = builtin(name);
    return prune(s.dictionary, s.relations.at(kEpsilonRelation));
}

}  // namespace

TEST_CASE("length_ratio_bound") {
    CHECK(length_ratio_bound(1) == 2);
    CHECK(length_ratio_bound(3) == 6);
    CHECK(length_ratio_bound(10) == 20);
    CHECK_THROWS_AS(length_ratio_bound(0), std::invalid_argument);
}

TEST_CASE("verify_length_ratio on pruned builtins") {
    PruningResult tr = prune_builtin("trivial");
    CheckReport rep = verify_length_ratio(tr, length_ratio_bound(tr.k), 8);
    CHECK(rep.pass);
    CHECK_FALSE(rep.vacuous);

    PruningResult z = prune_builtin("z_shortlex");
    rep = verify_length_ratio(z, length_ratio_bound(z.k), 10);
    CHECK(rep.pass);
    CHECK_FALSE(rep.vacuous);
}

TEST_CASE("verify_length_ratio flags a lopsided pair") {
    // plant x y^7: the single pair (a, a^7) breaks the ratio bound 6
    QuasiAutomaticStructure s = builtin("trivial");
    const NivatBimorphism& shape = s.relations.at(kEpsilonRelation);
    Word inner{0, 1, 1, 1, 1, 1, 1, 1};
    PruningResult bad{3, s.dictionary,
                      NivatBimorphism(shape.inner(), shape.outer(), shape.letters(),
                                      word_automaton(shape.inner(), inner)),
                      {}};
    CheckReport rep = verify_length_ratio(bad, 6, 10);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures.front() == "(a, aaaaaaa)");
}

TEST_CASE("m_table on the one-word dictionary") {
    QuasiAutomaticStructure s = builtin("trivial");
    PruningResult res = prune_builtin("trivial");
    Dfa kd = minimize(determinize(res.dictionary_k));
    REQUIRE(kd.num_states() == 2);
    int q0 = kd.initial();
    int q1 = *kd.step(q0, 0);

    MTable m = m_table(kd, s.oracle, 3, 12);
    CHECK(m.complete);
    GroupElement e = s.oracle.identity();
    CHECK(m.lookup(q0, q0, e) == 0);
    CHECK(m.lookup(q1, q1, e) == 0);
    CHECK(m.lookup(q0, q1, e) == 1);
    CHECK(m.max_length_within(0) == 1);
    CHECK(m.max_length_within(3) == 1);
}

TEST_CASE("m_table entries are consistent") {
    QuasiAutomaticStructure s = builtin("z_shortlex");
    PruningResult res = prune_builtin("z_shortlex");
    Dfa kd = minimize(determinize(res.dictionary_k));
    MTable m = m_table(kd, s.oracle, 3, 12);

    CHECK_FALSE(m.entries.empty());
    for (const MEntry& e : m.entries) {
        CHECK(s.oracle.evaluate(e.witness) == e.element);
        CHECK(static_cast<int>(e.witness.size()) == e.length);
        CHECK(s.oracle.norm(e.element) == e.norm);
        CHECK(e.norm <= 3);
        CHECK(m.lookup(e.from, e.to, e.element) == e.length);
        // only the empty word connects a state to itself by the identity
        CHECK((e.length == 0) == (e.from == e.to && s.oracle.is_identity(e.element)));
    }

    // a concrete lookup: the two-step path reading aa
    int q0 = kd.initial();
    int a = s.dictionary.alphabet().require("a");
    int q2 = *kd.step(*kd.step(q0, a), a);
    CHECK(m.lookup(q0, q2, s.oracle.evaluate({a, a})) == 2);
}

TEST_CASE("departure_function values") {
    SUBCASE("trivial") {
        QuasiAutomaticStructure s = builtin("trivial");
        DepartureTable t = departure_function(prune_builtin("trivial"), s.oracle, 3, 12);
        CHECK(t.c == 2);
        CHECK(t.k == 3);
        CHECK(t.ell == 6);
        CHECK(t.complete);
        REQUIRE(t.d_values.size() == 4);
        for (int n = 0; n <= 3; ++n) CHECK(t.d(n) == 30);
    }
    SUBCASE("z_shortlex") {
        QuasiAutomaticStructure s = builtin("z_shortlex");
        DepartureTable t = departure_function(prune_builtin("z_shortlex"), s.oracle, 3, 12);
        CHECK(t.c == 5);
        CHECK(t.ell == 18);
        CHECK_FALSE(t.complete);  // the dictionary has unboundedly long words
        REQUIRE(t.d_values.size() == 4);
        CHECK(t.d(0) == 216);
        CHECK(t.d(1) == 216);
        CHECK(t.d(2) == 216);
        CHECK(t.d(3) == 234);
    }
    SUBCASE("z2_table") {
        QuasiAutomaticStructure s = builtin("z2_table");
        DepartureTable t = departure_function(prune_builtin("z2_table"), s.oracle, 3, 12);
        CHECK(t.c == 3);
        CHECK(t.ell == 10);
        CHECK(t.complete);
        for (int n = 0; n <= 3; ++n) CHECK(t.d(n) == 80);
    }
    SUBCASE("arithmetic and monotonicity") {
        for (const auto& name : builtin_names()) {
            CAPTURE(name);
            QuasiAutomaticStructure s = builtin(name);
            DepartureTable t = departure_function(prune_builtin(name), s.oracle, 3, 12);
            REQUIRE(t.d_values.size() == 4);
            for (int n = 0; n <= 3; ++n) {
                CHECK(t.d(n) == 2LL * t.c * t.ell +
                                    static_cast<long long>(t.ell) * t.m.max_length_within(n));
                if (n > 0) CHECK(t.d(n) >= t.d(n - 1));
            }
        }
    }
}

TEST_CASE("verify_departure") {
    QuasiAutomaticStructure s = builtin("trivial");
    DepartureTable t = departure_function(prune_builtin("trivial"), s.oracle, 3, 12);

    SUBCASE("short caps are vacuous") {
        CheckReport rep = verify_departure(s.dictionary, s.oracle, t, 1, 24);
        CHECK(rep.vacuous);
        CHECK(rep.pass);
        CHECK(rep.checked == 0);
    }
    SUBCASE("a cap past the bound checks real factors") {
        // every factor norm is 0, so the norm >= 0 demand passes non-vacuously
        CheckReport rep = verify_departure(s.dictionary, s.oracle, t, 0, 32);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.pass);
        CHECK(rep.checked == 4);  // one factor in a^31, three in a^32
    }
    SUBCASE("an understated table is caught") {
        QuasiAutomaticStructure z = builtin("z_shortlex");
        DepartureTable fake;
        fake.c = 1;
        fake.k = 1;
        fake.ell = 2;
        fake.ball_bound = 1;
        fake.d_values = {0, 0};
        CheckReport rep = verify_departure(z.dictionary, z.oracle, fake, 1, 4);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.failures.empty());
        bool mentions_ab = false;
        for (const auto& f : rep.failures)
            if (f.find("ab") != std::string::npos) mentions_ab = true;
        CHECK(mentions_ab);
    }
}
