#include <set>
#include <vector>

#include "doctest.h"
#include "qad/group.hpp"
#include "test_support.hpp"

using namespace qad;

namespace {

GroupOracle z_oracle() {
    Alphabet ab({"a", "b"});
    return GroupOracle::free_abelian(ab, 1, {{0, {1}}, {1, {-1}}});
}

GroupOracle z2_oracle() {
    Alphabet g({"g"});
    return GroupOracle::finite_table(g, 2, 0, {0, 1, 1, 0}, {{0, 1}});
}

GroupOracle free1_oracle() {
    Alphabet ab({"a", "b"});
    return GroupOracle::free_group(ab, 1, {{0, {1}}, {1, {-1}}});
}

GroupOracle trivial_oracle() { return GroupOracle::trivial(Alphabet({"a"})); }

}  // namespace

TEST_CASE("evaluate") {
    GroupOracle z = z_oracle();
    CHECK(z.evaluate(word_of(z.alphabet(), "aab")) == z.evaluate(word_of(z.alphabet(), "a")));

    GroupOracle t = trivial_oracle();
    CHECK(t.is_identity(t.evaluate(word_of(t.alphabet(), "aaa"))));

    GroupOracle f = free1_oracle();
    CHECK(f.is_identity(f.evaluate(word_of(f.alphabet(), "abab"))));
    CHECK(f.evaluate({}) == f.identity());
}

TEST_CASE("equivalent") {
    GroupOracle z = z_oracle();
    CHECK(z.equivalent(word_of(z.alphabet(), "aab"), word_of(z.alphabet(), "a")));
    CHECK_FALSE(z.equivalent({0}, {1}));

    Alphabet ab({"a", "b"});
    GroupOracle f2 = GroupOracle::free_group(ab, 2, {{0, {1}}, {1, {2}}});
    CHECK_FALSE(f2.equivalent(word_of(ab, "ab"), word_of(ab, "ba")));
}

TEST_CASE("norm") {
    GroupOracle z = z_oracle();
    CHECK(z.norm(z.evaluate(word_of(z.alphabet(), "aaa"))) == 3);
    CHECK(z.norm(z.identity()) == 0);

    GroupOracle z2 = z2_oracle();
    CHECK(z2.norm(z2.generator(0)) == 1);
    CHECK(z2.norm(z2.identity()) == 0);

    GroupOracle f = free1_oracle();
    CHECK(f.norm(f.evaluate(word_of(f.alphabet(), "aabaa"))) == 3);
}

TEST_CASE("ball") {
    GroupOracle z = z_oracle();
    auto b1 = z.ball(1);
    CHECK(b1.size() == 3);  // -1, 0, +1

    GroupOracle t = trivial_oracle();
    CHECK(t.ball(5).size() == 1);

    GroupOracle f = free1_oracle();
    CHECK(f.ball(2).size() == 5);  // x^-2 .. x^2
}

TEST_CASE("distance") {
    GroupOracle z = z_oracle();
    CHECK(z.distance(word_of(z.alphabet(), "aa"), word_of(z.alphabet(), "aaa")) == 1);
    CHECK(z.distance(word_of(z.alphabet(), "ab"), word_of(z.alphabet(), "ab")) == 0);
    CHECK(z.distance({0}, {1}) == 2);
}

TEST_CASE("ball caps are enforced") {
    GroupOracle z = z_oracle();
    OracleCaps caps;
    caps.max_ball_radius = 2;
    z.set_caps(caps);
    CHECK_THROWS_AS(z.ball(3), std::runtime_error);
}

TEST_CASE("finite table construction rejects garbage") {
    Alphabet g({"g"});
    // not a group table: row 1 repeats an element
    CHECK_THROWS_AS(GroupOracle::finite_table(g, 2, 0, {0, 1, 1, 1}, {{0, 1}}),
                    std::invalid_argument);
    // wrong identity index
    CHECK_THROWS_AS(GroupOracle::finite_table(g, 2, 1, {0, 1, 1, 0}, {{0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("evaluate is a morphism") {
    std::mt19937 rng(4242);
    for (GroupOracle o : {z_oracle(), z2_oracle(), free1_oracle(), trivial_oracle()}) {
        for (int round = 0; round < 50; ++round) {
            Word u = test::random_word(rng, o.alphabet().size(), 6);
            Word v = test::random_word(rng, o.alphabet().size(), 6);
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            CHECK(o.evaluate(uv) == o.multiply(o.evaluate(u), o.evaluate(v)));
        }
    }
}

TEST_CASE("norm symmetry and triangle inequality on ball(4)") {
    for (GroupOracle o : {z_oracle(), z2_oracle(), free1_oracle(), trivial_oracle()}) {
        auto ball = o.ball(4);
        for (const auto& g : ball) {
            CHECK(o.norm(g) == o.norm(o.inverse(g)));
            CHECK(o.norm(g) <= 4);
        }
        for (const auto& g : ball)
            for (const auto& h : ball)
                CHECK(o.norm(o.multiply(g, h)) <= o.norm(g) + o.norm(h));
    }
}

TEST_CASE("ball frontier is consistent with norm") {
    for (GroupOracle o : {z_oracle(), z2_oracle(), free1_oracle(), trivial_oracle()}) {
        for (int n = 0; n <= 3; ++n) {
            auto small = o.ball(n);
            std::set<GroupElement> expect;
            for (const auto& g : o.ball(n + 1))
                if (o.norm(g) <= n)
                    expect.insert(g);
            CHECK(std::set<GroupElement>(small.begin(), small.end()) == expect);
        }
    }
}

TEST_CASE("distance is a metric on random word triples") {
    std::mt19937 rng(777);
    for (GroupOracle o : {z_oracle(), z2_oracle(), free1_oracle(), trivial_oracle()}) {
        for (int round = 0; round < 120; ++round) {
            Word u = test::random_word(rng, o.alphabet().size(), 6);
            Word v = test::random_word(rng, o.alphabet().size(), 6);
            Word w = test::random_word(rng, o.alphabet().size(), 6);
            CHECK(o.distance(u, u) == 0);
            CHECK(o.distance(u, v) == o.distance(v, u));
            CHECK(o.distance(u, w) <= o.distance(u, v) + o.distance(v, w));
            if (o.distance(u, v) == 0)
                CHECK(o.equivalent(u, v));
        }
    }
}

TEST_CASE("element rendering is stable") {
    GroupOracle z = z_oracle();
    CHECK(z.element_str(z.identity()) == "e");
    GroupOracle z2 = z2_oracle();
    CHECK(z2.element_str(z2.generator(0)) == "[1]");
}
