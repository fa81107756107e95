#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qad/geometry.hpp"
#include "test_support.hpp"

using namespace qad;

namespace {

// Z with a = +1, b = -1, same alphabet as the z builtins.
GroupOracle z_oracle() {
    Alphabet ab({"a", "b"});
    return GroupOracle::free_abelian(ab, 1, {{0, {1}}, {1, {-1}}});
}

std::set<GroupElement> prefix_elements(const GroupOracle& o, const Word& w, bool with_empty) {
    std::set<GroupElement> out;
    if (with_empty) out.insert(o.identity());
    Word p;
    for (int sym : w) {
        p.push_back(sym);
        out.insert(o.evaluate(p));
    }
    return out;
}

// Brute-force symmetrized Hausdorff distance over explicit prefix sets.
int brute_hausdorff(const GroupOracle& o, const Word& u, const Word& v, bool with_empty) {
    auto pu = prefix_elements(o, u, with_empty);
    auto pv = prefix_elements(o, v, with_empty);
    int best = 0;
    for (const auto& x : pu) {
        int closest = INT_MAX;
        for (const auto& y : pv) closest = std::min(closest, o.norm(o.multiply(o.inverse(x), y)));
        best = std::max(best, closest);
    }
    for (const auto& y : pv) {
        int closest = INT_MAX;
        for (const auto& x : pu) closest = std::min(closest, o.norm(o.multiply(o.inverse(x), y)));
        best = std::max(best, closest);
    }
    return best;
}

// Exhaustive witness search: every interleaving of u and v as aligned steps,
// displacement checked after each step.
bool brute_weak_witness(const GroupOracle& o, const Word& u, const Word& v, int k) {
    size_t n = u.size(), m = v.size();
    std::vector<std::vector<int>> disp(n + 1, std::vector<int>(m + 1));
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; j <= m; ++j) {
            Word pu(u.begin(), u.begin() + static_cast<long>(i));
            Word pv(v.begin(), v.begin() + static_cast<long>(j));
            disp[i][j] = o.norm(o.multiply(o.inverse(o.evaluate(pu)), o.evaluate(pv)));
        }
    if (disp[0][0] > k) return false;
    std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(m + 1, false));
    reach[0][0] = true;
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; j <= m; ++j) {
            if (!reach[i][j] || disp[i][j] > k) continue;
            if (i < n) reach[i + 1][j] = true;
            if (j < m) reach[i][j + 1] = true;
            if (i < n && j < m) reach[i + 1][j + 1] = true;
        }
    return reach[n][m] && disp[n][m] <= k;
}

Word aw(int n) { return Word(static_cast<size_t>(n), 0); }
Word bw(int n) { return Word(static_cast<size_t>(n), 1); }

}  // namespace

TEST_CASE("hausdorff_prefix_distance basics") {
    GroupOracle z = z_oracle();
    CHECK(hausdorff_prefix_distance(z, aw(3), aw(3)) == 0);
    CHECK(hausdorff_prefix_distance(z, aw(2), aw(3)) == 1);
    CHECK(hausdorff_prefix_distance(z, aw(3), aw(2)) == 1);  // symmetric
    // aa against bb: prefix elements {0,1,2} vs {0,-1,-2}; 2 is two away from 0
    CHECK(hausdorff_prefix_distance(z, aw(2), bw(2)) == 2);
    // without the empty prefix the b side starts at -1, pushing 2 to distance 3
    CHECK(hausdorff_prefix_distance(z, aw(2), bw(2), false) == 3);

    auto [duv, dvu] = hausdorff_directed(z, aw(1), aw(3));
    CHECK(duv == 0);  // every prefix of a is a prefix of aaa
    CHECK(dvu == 2);  // aaa reaches +3, two away from +1
    CHECK(hausdorff_prefix_distance(z, aw(1), aw(3)) == 2);
}

TEST_CASE("hausdorff agrees with the brute force") {
    GroupOracle z = z_oracle();
    std::mt19937 rng(5150);
    for (int round = 0; round < 60; ++round) {
        Word u = test::random_word(rng, 2, 5);
        Word v = test::random_word(rng, 2, 5);
        for (bool with_empty : {true, false}) {
            CAPTURE(round);
            CAPTURE(with_empty);
            if (!with_empty && (u.empty() || v.empty())) {
                // an empty word has no prefixes under this convention
                CHECK_THROWS_AS(hausdorff_prefix_distance(z, u, v, false),
                                std::invalid_argument);
                continue;
            }
            CHECK(hausdorff_prefix_distance(z, u, v, with_empty) ==
                  brute_hausdorff(z, u, v, with_empty));
        }
    }
}

TEST_CASE("hausdorff zero means equal prefix element sets") {
    GroupOracle z = z_oracle();
    std::mt19937 rng(31337);
    for (int round = 0; round < 80; ++round) {
        Word u = test::random_word(rng, 2, 4);
        Word v = test::random_word(rng, 2, 4);
        bool same_sets = prefix_elements(z, u, true) == prefix_elements(z, v, true);
        CHECK((hausdorff_prefix_distance(z, u, v) == 0) == same_sets);
    }
}

TEST_CASE("weak_lipschitz_witness") {
    GroupOracle z = z_oracle();

    SUBCASE("a witness at k=1 between aa and aaa") {
        auto rw = weak_lipschitz_witness(z, aw(2), aw(3), 1);
        REQUIRE(rw.has_value());
        CHECK(rw->left_word() == aw(2));
        CHECK(rw->right_word() == aw(3));
        // every step moves at most one letter per side, and all intermediate
        // prefix pairs stay within displacement 1
        Word pu, pv;
        for (const RewriteStep& st : rw->steps) {
            if (st.left) pu.push_back(*st.left);
            if (st.right) pv.push_back(*st.right);
            CHECK(z.norm(z.multiply(z.inverse(z.evaluate(pu)), z.evaluate(pv))) <= 1);
        }
        CHECK(pu == aw(2));
        CHECK(pv == aw(3));
    }
    SUBCASE("identical words need k=0 and a diagonal witness") {
        auto rw = weak_lipschitz_witness(z, aw(2), aw(2), 0);
        REQUIRE(rw.has_value());
        for (const RewriteStep& st : rw->steps) {
            CHECK(st.left.has_value());
            CHECK(st.right.has_value());
        }
    }
    SUBCASE("aa and bb need k=4, their endpoint displacement") {
        CHECK_FALSE(weak_lipschitz_witness(z, aw(2), bw(2), 1).has_value());
        CHECK_FALSE(weak_lipschitz_witness(z, aw(2), bw(2), 3).has_value());
        CHECK(weak_lipschitz_witness(z, aw(2), bw(2), 4).has_value());
    }
    SUBCASE("witnesses are monotone in k") {
        std::mt19937 rng(777);
        for (int round = 0; round < 40; ++round) {
            Word u = test::random_word(rng, 2, 4);
            Word v = test::random_word(rng, 2, 4);
            bool prev = false;
            for (int k = 0; k <= 5; ++k) {
                bool now = weak_lipschitz_witness(z, u, v, k).has_value();
                if (prev) CHECK(now);
                prev = now;
            }
        }
    }
}

TEST_CASE("witness search agrees with exhaustive interleaving") {
    GroupOracle z = z_oracle();
    std::vector<Word> words;
    for (int len = 0; len <= 3; ++len) {
        std::vector<Word> layer{{}};
        for (int i = 0; i < len; ++i) {
            std::vector<Word> next;
            for (const Word& w : layer)
                for (int sym : {0, 1}) {
                    Word e = w;
                    e.push_back(sym);
                    next.push_back(e);
                }
            layer = next;
        }
        words.insert(words.end(), layer.begin(), layer.end());
    }
    for (const Word& u : words)
        for (const Word& v : words)
            for (int k : {0, 1, 2}) {
                bool dp = weak_lipschitz_witness(z, u, v, k).has_value();
                CHECK(dp == brute_weak_witness(z, u, v, k));
                if (dp) {
                    auto rw = weak_lipschitz_witness(z, u, v, k);
                    CHECK(rw->left_word() == u);
                    CHECK(rw->right_word() == v);
                }
            }
}

TEST_CASE("check_lipschitz_hausdorff") {
    SUBCASE("one-word dictionary") {
        QuasiAutomaticStructure s = builtin("trivial");
        QuasiAutomaticStructure r =
            restrict_to(s, word_automaton(s.dictionary.alphabet(), {0}));
        HausdorffReport rep = check_lipschitz_hausdorff(r, 5);
        CHECK(rep.pass);
        CHECK(rep.k_observed == 0);
        CHECK(rep.pairs_checked == 1);  // only (a, a)
    }
    SUBCASE("z builtin") {
        HausdorffReport rep = check_lipschitz_hausdorff(builtin("z_shortlex"), 6);
        CHECK(rep.pass);
        CHECK(rep.k_observed == 1);
        CHECK(rep.pairs_checked == 37);
        CHECK_FALSE(rep.worst_pairs.empty());
    }
}

TEST_CASE("check_weak_lipschitz") {
    SUBCASE("trivial structure holds at k=0") {
        WeakLipschitzReport rep = check_weak_lipschitz(builtin("trivial"), 0, 5);
        CHECK(rep.pass);
        CHECK(rep.k_required == 0);
        CHECK(rep.pairs_checked > 0);
    }
    SUBCASE("z builtin needs k=1 at this scale") {
        WeakLipschitzReport rep = check_weak_lipschitz(builtin("z_shortlex"), 1, 6);
        CHECK(rep.pass);
        CHECK(rep.k_given == 1);
        CHECK(rep.k_required == 1);
        WeakLipschitzReport tight = check_weak_lipschitz(builtin("z_shortlex"), 0, 6);
        CHECK_FALSE(tight.pass);
        CHECK(tight.k_required == 1);
        CHECK_FALSE(tight.failures.empty());
    }
}

TEST_CASE("weak witnesses bound the hausdorff distance") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        QuasiAutomaticStructure s = builtin(name);
        WeakLipschitzReport weak = check_weak_lipschitz(s, INT_MAX, 5);
        CheckReport rep = weak_implies_hausdorff_check(s, weak.k_required, 5);
        CHECK(rep.pass);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.checked > 0);
    }
}
