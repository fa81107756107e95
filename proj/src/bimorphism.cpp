#include "qad/bimorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qad {

NivatBimorphism::NivatBimorphism(Alphabet inner, Alphabet outer, std::vector<TapeLetter> letters,
                                 Nfa h)
    : inner_(std::move(inner)), outer_(std::move(outer)), letters_(std::move(letters)),
      h_(std::move(h)) {
    if (!(h_.alphabet() == inner_))
        throw std::invalid_argument("bimorphism: automaton alphabet is not the inner alphabet");
    if (static_cast<int>(letters_.size()) != inner_.size())
        throw std::invalid_argument("bimorphism: need exactly one tape letter per inner symbol");
    for (int i = 0; i < inner_.size(); ++i) {
        if (letters_[static_cast<size_t>(i)].symbol != i)
            throw std::invalid_argument("bimorphism: tape letter order must follow inner ids");
        int payload = letters_[static_cast<size_t>(i)].payload;
        if (payload < 0 || payload >= outer_.size())
            throw std::invalid_argument("bimorphism: payload symbol out of range");
    }
}

NivatBimorphism NivatBimorphism::from_pair_transitions(const Alphabet& outer, int num_states,
                                                       int initial, const std::vector<int>& finals,
                                                       const std::vector<PairTransition>& transitions) {
    std::vector<std::string> inner_displays;
    std::vector<TapeLetter> letters;
    std::map<std::pair<Tape, int>, int> letter_ids;
    auto letter_for = [&](Tape tape, int payload) {
        auto key = std::make_pair(tape, payload);
        auto it = letter_ids.find(key);
        if (it != letter_ids.end())
            return it->second;
        int id = static_cast<int>(letters.size());
        std::string display =
            outer.at(payload).display + (tape == Tape::first ? "_1" : "_2");
        inner_displays.push_back(display);
        letters.push_back(TapeLetter{id, tape, payload});
        letter_ids.emplace(key, id);
        return id;
    };

    int next_state = num_states;
    std::vector<Transition> trans;
    for (const auto& pt : transitions) {
        if (!pt.first && !pt.second)
            throw std::invalid_argument("from_pair_transitions: transition consumes neither tape");
        if (pt.first && (*pt.first < 0 || *pt.first >= outer.size()))
            throw std::invalid_argument("from_pair_transitions: first-tape symbol out of range");
        if (pt.second && (*pt.second < 0 || *pt.second >= outer.size()))
            throw std::invalid_argument("from_pair_transitions: second-tape symbol out of range");
        if (pt.first && pt.second) {
            int mid = next_state++;
            trans.push_back({pt.from, letter_for(Tape::first, *pt.first), mid});
            trans.push_back({mid, letter_for(Tape::second, *pt.second), pt.to});
        } else if (pt.first) {
            trans.push_back({pt.from, letter_for(Tape::first, *pt.first), pt.to});
        } else {
            trans.push_back({pt.from, letter_for(Tape::second, *pt.second), pt.to});
        }
    }
    Alphabet inner(inner_displays);
    Nfa h(inner, next_state, initial, finals, std::move(trans));
    return NivatBimorphism(std::move(inner), outer, std::move(letters), std::move(h));
}

std::pair<Word, Word> NivatBimorphism::eval_word(const Word& inner_word) const {
    Word u, v;
    for (int sym : inner_word) {
        if (sym < 0 || sym >= inner_.size())
            throw std::invalid_argument("eval_word: symbol not in inner alphabet");
        const TapeLetter& l = letters_[static_cast<size_t>(sym)];
        (l.tape == Tape::first ? u : v).push_back(l.payload);
    }
    return {std::move(u), std::move(v)};
}

std::vector<std::pair<Word, Word>> NivatBimorphism::enumerate_pairs(int max_b_len) const {
    std::set<std::pair<Word, Word>> dedup;
    for (const auto& w : enumerate(h_, max_b_len))
        dedup.insert(eval_word(w));
    std::vector<std::pair<Word, Word>> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return length_lex_less(a.first, b.first);
        return length_lex_less(a.second, b.second);
    });
    return out;
}

bool NivatBimorphism::contains_pair(const Word& u, const Word& v) const {
    for (int sym : u)
        if (sym < 0 || sym >= outer_.size())
            throw std::invalid_argument("contains_pair: symbol not in outer alphabet");
    for (int sym : v)
        if (sym < 0 || sym >= outer_.size())
            throw std::invalid_argument("contains_pair: symbol not in outer alphabet");
    // Reachability over (state of h, consumed prefix of u, consumed prefix
    // of v); exact, no enumeration.
    auto adj = h_.adjacency();
    using Config = std::tuple<int, int, int>;
    std::set<Config> seen;
    std::deque<Config> queue;
    auto push = [&](int q, int i, int j) {
        if (seen.emplace(q, i, j).second)
            queue.emplace_back(q, i, j);
    };
    push(h_.initial(), 0, 0);
    while (!queue.empty()) {
        auto [q, i, j] = queue.front();
        queue.pop_front();
        if (h_.is_final(q) && i == static_cast<int>(u.size()) && j == static_cast<int>(v.size()))
            return true;
        for (auto [sym, to] : adj[static_cast<size_t>(q)]) {
            const TapeLetter& l = letters_[static_cast<size_t>(sym)];
            if (l.tape == Tape::first) {
                if (i < static_cast<int>(u.size()) && u[static_cast<size_t>(i)] == l.payload)
                    push(to, i + 1, j);
            } else {
                if (j < static_cast<int>(v.size()) && v[static_cast<size_t>(j)] == l.payload)
                    push(to, i, j + 1);
            }
        }
    }
    return false;
}

Nfa NivatBimorphism::image(Tape tape) const {
    EpsNfa e;
    e.alphabet = outer_;
    e.num_states = h_.num_states();
    e.initial = h_.initial();
    e.finals = h_.finals();
    for (const auto& t : h_.transitions()) {
        const TapeLetter& l = letters_[static_cast<size_t>(t.sym)];
        if (l.tape == tape)
            e.transitions.push_back({t.from, l.payload, t.to});
        else
            e.eps.emplace_back(t.from, t.to);
    }
    return trim(e.eliminate());
}

Nfa NivatBimorphism::image_first() const {
    return image(Tape::first);
}

Nfa NivatBimorphism::image_second() const {
    return image(Tape::second);
}

NivatBimorphism NivatBimorphism::restrict_ranges(const Nfa& ku, const Nfa& kv) const {
    if (!(ku.alphabet() == outer_) || !(kv.alphabet() == outer_))
        throw std::invalid_argument("restrict_ranges: range automata must use the outer alphabet");
    auto hadj = h_.adjacency();
    auto uadj = ku.adjacency();
    auto vadj = kv.adjacency();
    using Config = std::tuple<int, int, int>;  // (h state, ku state, kv state)
    std::map<Config, int> ids;
    std::vector<Config> order;
    std::deque<Config> queue;
    auto intern = [&](Config c) {
        auto it = ids.find(c);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(order.size());
        ids.emplace(c, id);
        order.push_back(c);
        queue.push_back(c);
        return id;
    };
    intern({h_.initial(), ku.initial(), kv.initial()});
    std::vector<Transition> trans;
    while (!queue.empty()) {
        auto cfg = queue.front();
        queue.pop_front();
        auto [q, su, sv] = cfg;
        int from = ids.at(cfg);
        for (auto [sym, to] : hadj[static_cast<size_t>(q)]) {
            const TapeLetter& l = letters_[static_cast<size_t>(sym)];
            if (l.tape == Tape::first) {
                // Letters silent on tape two advance only the ku tracker.
                for (auto [c, ut] : uadj[static_cast<size_t>(su)])
                    if (c == l.payload)
                        trans.push_back({from, sym, intern({to, ut, sv})});
            } else {
                for (auto [c, vt] : vadj[static_cast<size_t>(sv)])
                    if (c == l.payload)
                        trans.push_back({from, sym, intern({to, su, vt})});
            }
        }
    }
    std::vector<int> finals;
    for (size_t i = 0; i < order.size(); ++i) {
        auto [q, su, sv] = order[i];
        if (h_.is_final(q) && ku.is_final(su) && kv.is_final(sv))
            finals.push_back(static_cast<int>(i));
    }
    Nfa restricted(inner_, static_cast<int>(order.size()), 0, std::move(finals), std::move(trans));
    return NivatBimorphism(inner_, outer_, letters_, trim(restricted));
}

}  // namespace qad
