#include "qad/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qad {

void QuasiAutomaticStructure::check_well_formed() const {
    if (!(dictionary.alphabet() == oracle.alphabet()))
        throw std::invalid_argument("structure: dictionary and oracle alphabets differ");
    if (relations.find(kEpsilonRelation) == relations.end())
        throw std::invalid_argument("structure: missing empty-letter relation");
    for (const auto& s : dictionary.alphabet())
        if (relations.find(s.id) == relations.end())
            throw std::invalid_argument("structure: missing relation for generator '" + s.display +
                                        "'");
    for (const auto& [key, bm] : relations) {
        if (key != kEpsilonRelation && (key < 0 || key >= dictionary.alphabet().size()))
            throw std::invalid_argument("structure: relation key is not a generator");
        if (!(bm.outer() == dictionary.alphabet()))
            throw std::invalid_argument("structure: relation outer alphabet differs from dictionary");
    }
}

std::string QuasiAutomaticStructure::relation_name(int key) const {
    if (key == kEpsilonRelation)
        return "eps";
    return dictionary.alphabet().at(key).display;
}

ValidationReport validate(const QuasiAutomaticStructure& s, int max_len) {
    if (max_len < 1)
        throw std::invalid_argument("validate: max_len must be positive");
    s.check_well_formed();
    ValidationReport report;
    const auto& oracle = s.oracle;
    std::vector<Word> words = enumerate(s.dictionary, max_len);

    for (const auto& [key, bm] : s.relations) {
        std::string rel = s.relation_name(key);
        // The appended generator element (identity for the eps relation).
        GroupElement step = key == kEpsilonRelation ? oracle.identity() : oracle.generator(key);

        for (const auto& [u, v] : bm.enumerate_pairs(2 * max_len)) {
            if (static_cast<int>(u.size()) > max_len || static_cast<int>(v.size()) > max_len)
                continue;
            ++report.pairs_checked;
            bool in_dict = accepts(s.dictionary, u) && accepts(s.dictionary, v);
            bool related = oracle.multiply(oracle.evaluate(u), step) == oracle.evaluate(v);
            if (!in_dict || !related)
                report.failures.push_back({rel, "soundness", word_str(s.dictionary.alphabet(), u),
                                           word_str(s.dictionary.alphabet(), v)});
        }
        for (const auto& u : words)
            for (const auto& v : words) {
                if (!(oracle.multiply(oracle.evaluate(u), step) == oracle.evaluate(v)))
                    continue;
                ++report.pairs_checked;
                if (!bm.contains_pair(u, v))
                    report.failures.push_back({rel, "completeness",
                                               word_str(s.dictionary.alphabet(), u),
                                               word_str(s.dictionary.alphabet(), v)});
            }
    }
    report.pass = report.failures.empty();
    return report;
}

CheckReport check_onto(const GroupOracle& oracle, const Nfa& dictionary, int n, int word_cap) {
    CheckReport report;
    report.name = "onto";
    std::set<GroupElement> represented;
    for (const auto& w : enumerate(dictionary, word_cap))
        represented.insert(oracle.evaluate(w));
    for (const auto& g : oracle.ball(n)) {
        ++report.checked;
        if (represented.find(g) == represented.end())
            report.failures.push_back(oracle.element_str(g));
    }
    report.pass = report.failures.empty();
    if (!report.pass)
        report.notes.push_back(
            "inconclusive: missing elements may have representatives longer than the word cap");
    return report;
}

CheckReport check_onto(const QuasiAutomaticStructure& s, int n, int word_cap) {
    return check_onto(s.oracle, s.dictionary, n, word_cap);
}

namespace {

QuasiAutomaticStructure builtin_trivial() {
    Alphabet a({"a"});
    Nfa dict = plus_closure(word_automaton(a, {0}));

    // Full relation on a+ x a+: first tape then second, at least one letter
    // each. Inner word x^i y^j spells the pair (a^i, a^j).
    Alphabet inner({"x", "y"});
    std::vector<TapeLetter> letters{{0, Tape::first, 0}, {1, Tape::second, 0}};
    Nfa h(inner, 3, 0, {2}, {{0, 0, 1}, {1, 0, 1}, {1, 1, 2}, {2, 1, 2}});
    NivatBimorphism full(inner, a, letters, h);

    QuasiAutomaticStructure s{GroupOracle::trivial(a), std::move(dict), {}};
    s.relations.emplace(kEpsilonRelation, full);
    s.relations.emplace(0, full);
    return s;
}

// Shared by z_shortlex and free_group_rank1, which differ only in the oracle
// backend: A = {a, b} with a and b mutually inverse, L = a+ | b+ | ab.
struct ZLikeParts {
    Alphabet alphabet;
    Nfa dictionary;
    NivatBimorphism r_eps;
    NivatBimorphism r_a;
    NivatBimorphism r_b;
};

ZLikeParts z_like_parts() {
    Alphabet ab({"a", "b"});
    const int A = 0, B = 1;
    Nfa raw = unite(unite(plus_closure(word_automaton(ab, {A})),
                          plus_closure(word_automaton(ab, {B}))),
                    word_automaton(ab, {A, B}));
    Dfa dict = minimize(determinize(raw));

    // Identity relation in synchronous form: each dictionary transition is
    // consumed on both tapes, which alternates the inner letters and leaves
    // no circuit silent on either tape.
    std::vector<PairTransition> diag;
    for (const auto& t : dict.nfa().transitions())
        diag.push_back({t.from, t.sym, t.sym, t.to});
    NivatBimorphism r_eps = NivatBimorphism::from_pair_transitions(
        ab, dict.num_states(), dict.initial(), dict.nfa().finals(), diag);

    // u a ~ v: (a^n, a^{n+1}), (b^{n+1}, b^n), (b, ab), (ab, a).
    std::vector<PairTransition> ra{
        {0, A, A, 1}, {1, A, A, 1}, {1, std::nullopt, A, 5},
        {0, B, B, 2}, {2, B, B, 2}, {2, B, std::nullopt, 5},
        {0, B, A, 3}, {3, std::nullopt, B, 5},
        {0, A, A, 4}, {4, B, std::nullopt, 5},
    };
    // u b ~ v: (a^{n+1}, a^n), (b^n, b^{n+1}), (a, ab), (ab, b).
    std::vector<PairTransition> rb{
        {0, A, A, 1}, {1, A, A, 1}, {1, A, std::nullopt, 5},
        {0, B, B, 2}, {2, B, B, 2}, {2, std::nullopt, B, 5},
        {0, A, A, 3}, {3, std::nullopt, B, 5},
        {0, A, B, 4}, {4, B, std::nullopt, 5},
    };
    NivatBimorphism r_a = NivatBimorphism::from_pair_transitions(ab, 6, 0, {5}, ra);
    NivatBimorphism r_b = NivatBimorphism::from_pair_transitions(ab, 6, 0, {5}, rb);
    return {ab, dict.nfa(), std::move(r_eps), std::move(r_a), std::move(r_b)};
}

QuasiAutomaticStructure builtin_z_shortlex() {
    ZLikeParts parts = z_like_parts();
    GroupOracle o = GroupOracle::free_abelian(parts.alphabet, 1, {{0, {1}}, {1, {-1}}});
    QuasiAutomaticStructure s{std::move(o), std::move(parts.dictionary), {}};
    s.relations.emplace(kEpsilonRelation, std::move(parts.r_eps));
    s.relations.emplace(0, std::move(parts.r_a));
    s.relations.emplace(1, std::move(parts.r_b));
    return s;
}

QuasiAutomaticStructure builtin_free_group_rank1() {
    ZLikeParts parts = z_like_parts();
    GroupOracle o = GroupOracle::free_group(parts.alphabet, 1, {{0, {1}}, {1, {-1}}});
    QuasiAutomaticStructure s{std::move(o), std::move(parts.dictionary), {}};
    s.relations.emplace(kEpsilonRelation, std::move(parts.r_eps));
    s.relations.emplace(0, std::move(parts.r_a));
    s.relations.emplace(1, std::move(parts.r_b));
    return s;
}

QuasiAutomaticStructure builtin_z2_table() {
    Alphabet a({"g"});
    const int G = 0;
    GroupOracle o = GroupOracle::finite_table(a, 2, 0, {0, 1, 1, 0}, {{G, 1}});
    Nfa dict = plus_closure(word_automaton(a, {G}));

    // (g^m, g^n) with matching (eps relation) or differing (g relation)
    // parity: first tape counted on states 1/2, then the second on 3..6.
    std::vector<PairTransition> parity{
        {0, G, std::nullopt, 1}, {1, G, std::nullopt, 2}, {2, G, std::nullopt, 1},
        {1, std::nullopt, G, 3}, {3, std::nullopt, G, 4}, {4, std::nullopt, G, 3},
        {2, std::nullopt, G, 5}, {5, std::nullopt, G, 6}, {6, std::nullopt, G, 5},
    };
    NivatBimorphism r_eps = NivatBimorphism::from_pair_transitions(a, 7, 0, {3, 6}, parity);
    NivatBimorphism r_g = NivatBimorphism::from_pair_transitions(a, 7, 0, {4, 5}, parity);

    QuasiAutomaticStructure s{std::move(o), std::move(dict), {}};
    s.relations.emplace(kEpsilonRelation, std::move(r_eps));
    s.relations.emplace(G, std::move(r_g));
    return s;
}

}  // namespace

QuasiAutomaticStructure builtin(const std::string& name) {
    if (name == "trivial")
        return builtin_trivial();
    if (name == "z_shortlex")
        return builtin_z_shortlex();
    if (name == "z2_table")
        return builtin_z2_table();
    if (name == "free_group_rank1")
        return builtin_free_group_rank1();
    throw std::invalid_argument("unknown builtin structure '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"trivial", "z_shortlex", "z2_table", "free_group_rank1"};
}

QuasiAutomaticStructure restrict_to(const QuasiAutomaticStructure& s, const Nfa& k) {
    if (!(k.alphabet() == s.dictionary.alphabet()))
        throw std::invalid_argument("restrict_to: alphabet mismatch");
    if (is_empty(k))
        throw std::invalid_argument("restrict_to: empty dictionary is not allowed");
    if (!is_sublanguage(k, s.dictionary))
        throw std::invalid_argument("restrict_to: K is not a sublanguage of the dictionary");
    QuasiAutomaticStructure out{s.oracle, trim(k), {}};
    for (const auto& [key, bm] : s.relations)
        out.relations.emplace(key, bm.restrict_ranges(k, k));
    return out;
}

}  // namespace qad
