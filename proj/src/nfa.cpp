#include "qad/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace qad {

namespace {

void require_same_alphabet(const Nfa& x, const Nfa& y, const char* op) {
    if (!(x.alphabet() == y.alphabet()))
        throw std::invalid_argument(std::string(op) + ": operand alphabets differ");
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, int num_states, int initial, std::vector<int> finals,
         std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
    if (num_states_ < 1)
        throw std::invalid_argument("nfa: need at least one state");
    auto check_state = [&](int q, const char* what) {
        if (q < 0 || q >= num_states_)
            throw std::invalid_argument(std::string("nfa: ") + what + " state " + std::to_string(q) +
                                        " out of range");
    };
    check_state(initial_, "initial");
    for (int f : finals_)
        check_state(f, "final");
    for (const auto& t : transitions_) {
        check_state(t.from, "source");
        check_state(t.to, "target");
        if (t.sym < 0 || t.sym >= alphabet_.size())
            throw std::invalid_argument("nfa: transition symbol " + std::to_string(t.sym) +
                                        " not in alphabet");
    }
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    final_mask_.assign(static_cast<size_t>(num_states_), false);
    for (int f : finals_)
        final_mask_[static_cast<size_t>(f)] = true;
}

std::vector<std::vector<std::pair<int, int>>> Nfa::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(num_states_));
    for (const auto& t : transitions_)
        adj[static_cast<size_t>(t.from)].emplace_back(t.sym, t.to);
    return adj;  // transitions_ is sorted, so each list is sorted
}

Dfa::Dfa(Nfa nfa) : nfa_(std::move(nfa)) {
    const int n = nfa_.num_states();
    const int a = nfa_.alphabet().size();
    table_.assign(static_cast<size_t>(n) * static_cast<size_t>(a), -1);
    for (const auto& t : nfa_.transitions()) {
        int& cell = table_[static_cast<size_t>(t.from) * static_cast<size_t>(a) +
                           static_cast<size_t>(t.sym)];
        if (cell != -1 && cell != t.to)
            throw std::invalid_argument("dfa: nondeterministic on state " + std::to_string(t.from) +
                                        " symbol '" + nfa_.alphabet().at(t.sym).display + "'");
        cell = t.to;
    }
}

std::optional<int> Dfa::step(int q, int sym) const {
    if (q < 0 || q >= num_states())
        throw std::invalid_argument("dfa: state out of range");
    if (sym < 0 || sym >= alphabet().size())
        throw std::invalid_argument("dfa: symbol out of range");
    int to = table_[static_cast<size_t>(q) * static_cast<size_t>(alphabet().size()) +
                    static_cast<size_t>(sym)];
    if (to < 0)
        return std::nullopt;
    return to;
}

Nfa EpsNfa::eliminate() const {
    // Backward-closure variant: route every transition reachable through
    // epsilon moves directly, and mark states whose closure meets a final.
    std::vector<std::vector<int>> eps_adj(static_cast<size_t>(num_states));
    for (auto [f, t] : eps)
        eps_adj[static_cast<size_t>(f)].push_back(t);

    std::vector<bool> final_mask(static_cast<size_t>(num_states), false);
    for (int f : finals)
        final_mask[static_cast<size_t>(f)] = true;

    std::vector<Transition> out_trans;
    std::vector<int> out_finals;
    for (int p = 0; p < num_states; ++p) {
        // closure of p
        std::vector<bool> seen(static_cast<size_t>(num_states), false);
        std::deque<int> queue{p};
        seen[static_cast<size_t>(p)] = true;
        bool fin = false;
        while (!queue.empty()) {
            int r = queue.front();
            queue.pop_front();
            if (final_mask[static_cast<size_t>(r)])
                fin = true;
            for (int s : eps_adj[static_cast<size_t>(r)])
                if (!seen[static_cast<size_t>(s)]) {
                    seen[static_cast<size_t>(s)] = true;
                    queue.push_back(s);
                }
        }
        if (fin)
            out_finals.push_back(p);
        for (const auto& t : transitions)
            if (seen[static_cast<size_t>(t.from)])
                out_trans.push_back(Transition{p, t.sym, t.to});
    }
    return Nfa(alphabet, num_states, initial, std::move(out_finals), std::move(out_trans));
}

Nfa unite(const Nfa& x, const Nfa& y) {
    require_same_alphabet(x, y, "unite");
    // Fresh initial state 0 mirroring both old initials; x shifts by 1, y by
    // 1 + |x|.
    const int xoff = 1;
    const int yoff = 1 + x.num_states();
    std::vector<Transition> trans;
    std::vector<int> finals;
    for (const auto& t : x.transitions())
        trans.push_back({t.from + xoff, t.sym, t.to + xoff});
    for (const auto& t : y.transitions())
        trans.push_back({t.from + yoff, t.sym, t.to + yoff});
    for (const auto& t : x.transitions())
        if (t.from == x.initial())
            trans.push_back({0, t.sym, t.to + xoff});
    for (const auto& t : y.transitions())
        if (t.from == y.initial())
            trans.push_back({0, t.sym, t.to + yoff});
    for (int f : x.finals())
        finals.push_back(f + xoff);
    for (int f : y.finals())
        finals.push_back(f + yoff);
    if (x.is_final(x.initial()) || y.is_final(y.initial()))
        finals.push_back(0);
    return Nfa(x.alphabet(), 1 + x.num_states() + y.num_states(), 0, std::move(finals),
               std::move(trans));
}

Nfa concat(const Nfa& x, const Nfa& y) {
    require_same_alphabet(x, y, "concat");
    const int yoff = x.num_states();
    EpsNfa e;
    e.alphabet = x.alphabet();
    e.num_states = x.num_states() + y.num_states();
    e.initial = x.initial();
    for (const auto& t : x.transitions())
        e.transitions.push_back(t);
    for (const auto& t : y.transitions())
        e.transitions.push_back({t.from + yoff, t.sym, t.to + yoff});
    for (int f : x.finals())
        e.eps.emplace_back(f, y.initial() + yoff);
    for (int f : y.finals())
        e.finals.push_back(f + yoff);
    return e.eliminate();
}

Nfa intersect(const Nfa& x, const Nfa& y) {
    require_same_alphabet(x, y, "intersect");
    auto xadj = x.adjacency();
    auto yadj = y.adjacency();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> order;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](std::pair<int, int> pq) {
        auto it = ids.find(pq);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(order.size());
        ids.emplace(pq, id);
        order.push_back(pq);
        queue.push_back(pq);
        return id;
    };
    intern({x.initial(), y.initial()});
    std::vector<Transition> trans;
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        int from = ids.at({p, q});
        for (auto [cs, ct] : xadj[static_cast<size_t>(p)])
            for (auto [ds, dt] : yadj[static_cast<size_t>(q)])
                if (cs == ds)
                    trans.push_back({from, cs, intern({ct, dt})});
    }
    std::vector<int> finals;
    for (size_t i = 0; i < order.size(); ++i)
        if (x.is_final(order[i].first) && y.is_final(order[i].second))
            finals.push_back(static_cast<int>(i));
    return Nfa(x.alphabet(), static_cast<int>(order.size()), 0, std::move(finals),
               std::move(trans));
}

Dfa determinize(const Nfa& x) {
    auto adj = x.adjacency();
    const int nsym = x.alphabet().size();
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> order;
    std::deque<int> queue;
    auto intern = [&](std::vector<int> subset) {
        auto it = ids.find(subset);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(order.size());
        ids.emplace(subset, id);
        order.push_back(std::move(subset));
        queue.push_back(id);
        return id;
    };
    intern({x.initial()});
    std::vector<Transition> trans;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        std::vector<int> subset = order[static_cast<size_t>(cur)];
        for (int c = 0; c < nsym; ++c) {
            std::set<int> next;
            for (int q : subset)
                for (auto [sym, to] : adj[static_cast<size_t>(q)])
                    if (sym == c)
                        next.insert(to);
            if (next.empty())
                continue;
            int to = intern(std::vector<int>(next.begin(), next.end()));
            trans.push_back({cur, c, to});
        }
    }
    std::vector<int> finals;
    for (size_t i = 0; i < order.size(); ++i)
        for (int q : order[i])
            if (x.is_final(q)) {
                finals.push_back(static_cast<int>(i));
                break;
            }
    return Dfa(Nfa(x.alphabet(), static_cast<int>(order.size()), 0, std::move(finals),
                   std::move(trans)));
}

Nfa trim(const Nfa& x) {
    const size_t n = static_cast<size_t>(x.num_states());
    std::vector<bool> fwd(n, false), bwd(n, false);
    {
        std::deque<int> queue{x.initial()};
        fwd[static_cast<size_t>(x.initial())] = true;
        auto adj = x.adjacency();
        while (!queue.empty()) {
            int q = queue.front();
            queue.pop_front();
            for (auto [sym, to] : adj[static_cast<size_t>(q)])
                if (!fwd[static_cast<size_t>(to)]) {
                    fwd[static_cast<size_t>(to)] = true;
                    queue.push_back(to);
                }
        }
    }
    {
        std::vector<std::vector<int>> radj(n);
        for (const auto& t : x.transitions())
            radj[static_cast<size_t>(t.to)].push_back(t.from);
        std::deque<int> queue;
        for (int f : x.finals()) {
            bwd[static_cast<size_t>(f)] = true;
            queue.push_back(f);
        }
        while (!queue.empty()) {
            int q = queue.front();
            queue.pop_front();
            for (int p : radj[static_cast<size_t>(q)])
                if (!bwd[static_cast<size_t>(p)]) {
                    bwd[static_cast<size_t>(p)] = true;
                    queue.push_back(p);
                }
        }
    }
    std::vector<int> remap(n, -1);
    int count = 0;
    for (size_t q = 0; q < n; ++q)
        if (fwd[q] && bwd[q])
            remap[q] = count++;
    if (remap[static_cast<size_t>(x.initial())] < 0)
        return Nfa(x.alphabet(), 1, 0, {}, {});  // empty language
    std::vector<Transition> trans;
    for (const auto& t : x.transitions())
        if (remap[static_cast<size_t>(t.from)] >= 0 && remap[static_cast<size_t>(t.to)] >= 0)
            trans.push_back({remap[static_cast<size_t>(t.from)], t.sym,
                             remap[static_cast<size_t>(t.to)]});
    std::vector<int> finals;
    for (int f : x.finals())
        if (remap[static_cast<size_t>(f)] >= 0)
            finals.push_back(remap[static_cast<size_t>(f)]);
    return Nfa(x.alphabet(), count, remap[static_cast<size_t>(x.initial())], std::move(finals),
               std::move(trans));
}

Dfa minimize(const Dfa& x) {
    Nfa t = trim(x.nfa());
    if (t.finals().empty())
        return Dfa(Nfa(t.alphabet(), 1, 0, {}, {}));
    const int n = t.num_states();
    const int nsym = t.alphabet().size();
    Dfa d(t);  // trimmed, still deterministic

    // Moore refinement over the partial transition table; missing edges keep
    // the sentinel class -1, which stands for the implicit sink.
    std::vector<int> cls(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q)
        cls[static_cast<size_t>(q)] = d.is_final(q) ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(static_cast<size_t>(n));
        // Keep numbering stable: scan states in order, assign new class ids
        // by first occurrence of each signature.
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<size_t>(nsym) + 1);
            sig.push_back(cls[static_cast<size_t>(q)]);
            for (int c = 0; c < nsym; ++c) {
                auto to = d.step(q, c);
                sig.push_back(to ? cls[static_cast<size_t>(*to)] : -1);
            }
            auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next[static_cast<size_t>(q)] = it->second;
        }
        bool changed = false;
        for (int q = 0; q < n; ++q)
            if (next[static_cast<size_t>(q)] != cls[static_cast<size_t>(q)])
                changed = true;
        cls = std::move(next);
        if (!changed)
            break;
    }

    // Renumber classes by smallest member state for determinism.
    int nclasses = 0;
    for (int q = 0; q < n; ++q)
        nclasses = std::max(nclasses, cls[static_cast<size_t>(q)] + 1);
    std::vector<int> newid(static_cast<size_t>(nclasses), -1);
    int count = 0;
    for (int q = 0; q < n; ++q) {
        int c = cls[static_cast<size_t>(q)];
        if (newid[static_cast<size_t>(c)] < 0)
            newid[static_cast<size_t>(c)] = count++;
    }
    std::vector<Transition> trans;
    std::vector<int> finals;
    std::vector<bool> fin_seen(static_cast<size_t>(count), false);
    for (int q = 0; q < n; ++q) {
        int from = newid[static_cast<size_t>(cls[static_cast<size_t>(q)])];
        if (d.is_final(q) && !fin_seen[static_cast<size_t>(from)]) {
            fin_seen[static_cast<size_t>(from)] = true;
            finals.push_back(from);
        }
        for (int c = 0; c < nsym; ++c)
            if (auto to = d.step(q, c))
                trans.push_back({from, c, newid[static_cast<size_t>(cls[static_cast<size_t>(*to)])]});
    }
    int initial = newid[static_cast<size_t>(cls[static_cast<size_t>(d.initial())])];
    return Dfa(Nfa(t.alphabet(), count, initial, std::move(finals), std::move(trans)));
}

Nfa difference(const Nfa& x, const Nfa& y) {
    require_same_alphabet(x, y, "difference");
    Dfa yd = determinize(y);
    // Complete with an explicit sink, then complement.
    const int n = yd.num_states();
    const int sink = n;
    const int nsym = yd.alphabet().size();
    std::vector<Transition> trans;
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < nsym; ++c) {
            auto to = yd.step(q, c);
            trans.push_back({q, c, to ? *to : sink});
        }
    for (int c = 0; c < nsym; ++c)
        trans.push_back({sink, c, sink});
    std::vector<int> finals;
    for (int q = 0; q <= n; ++q)
        if (q == sink || !yd.is_final(q))
            finals.push_back(q);
    Nfa complement(yd.alphabet(), n + 1, yd.initial(), std::move(finals), std::move(trans));
    return trim(intersect(x, complement));
}

bool is_empty(const Nfa& x) {
    return trim(x).finals().empty();
}

bool accepts(const Nfa& x, const Word& w) {
    for (int sym : w)
        if (sym < 0 || sym >= x.alphabet().size())
            throw std::invalid_argument("accepts: symbol not in alphabet");
    auto adj = x.adjacency();
    std::set<int> cur{x.initial()};
    for (int sym : w) {
        std::set<int> next;
        for (int q : cur)
            for (auto [c, to] : adj[static_cast<size_t>(q)])
                if (c == sym)
                    next.insert(to);
        cur = std::move(next);
        if (cur.empty())
            return false;
    }
    for (int q : cur)
        if (x.is_final(q))
            return true;
    return false;
}

namespace {

void enumerate_rec(const std::vector<std::vector<std::pair<int, int>>>& adj, const Nfa& x,
                   int nsym, std::vector<int>& states, Word& word, int max_len,
                   std::vector<Word>& out) {
    for (int q : states)
        if (x.is_final(q)) {
            out.push_back(word);
            break;
        }
    if (static_cast<int>(word.size()) == max_len)
        return;
    for (int c = 0; c < nsym; ++c) {
        std::set<int> next;
        for (int q : states)
            for (auto [sym, to] : adj[static_cast<size_t>(q)])
                if (sym == c)
                    next.insert(to);
        if (next.empty())
            continue;
        std::vector<int> nv(next.begin(), next.end());
        word.push_back(c);
        enumerate_rec(adj, x, nsym, nv, word, max_len, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate(const Nfa& x, int max_len) {
    if (max_len < 0)
        throw std::invalid_argument("enumerate: negative max_len");
    auto adj = x.adjacency();
    std::vector<int> start{x.initial()};
    Word word;
    std::vector<Word> out;
    enumerate_rec(adj, x, x.alphabet().size(), start, word, max_len, out);
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

Nfa empty_language(const Alphabet& alphabet) {
    return Nfa(alphabet, 1, 0, {}, {});
}

Nfa word_automaton(const Alphabet& alphabet, const Word& w) {
    std::vector<Transition> trans;
    for (size_t i = 0; i < w.size(); ++i)
        trans.push_back({static_cast<int>(i), w[i], static_cast<int>(i) + 1});
    return Nfa(alphabet, static_cast<int>(w.size()) + 1, 0, {static_cast<int>(w.size())},
               std::move(trans));
}

Nfa from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    Nfa acc = empty_language(alphabet);
    for (const auto& w : words)
        acc = unite(acc, word_automaton(alphabet, w));
    return trim(acc);
}

Nfa plus_closure(const Nfa& x) {
    EpsNfa e;
    e.alphabet = x.alphabet();
    e.num_states = x.num_states();
    e.initial = x.initial();
    e.transitions = x.transitions();
    e.finals = x.finals();
    for (int f : x.finals())
        e.eps.emplace_back(f, x.initial());
    return e.eliminate();
}

bool is_sublanguage(const Nfa& x, const Nfa& y) {
    return is_empty(difference(x, y));
}

bool language_equal(const Nfa& x, const Nfa& y) {
    return is_sublanguage(x, y) && is_sublanguage(y, x);
}

}  // namespace qad
