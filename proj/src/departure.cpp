#include "qad/departure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace qad {

int length_ratio_bound(int k) {
    if (k < 1)
        throw std::invalid_argument("length_ratio_bound: k must be positive");
    return 2 * k;
}

CheckReport verify_length_ratio(const PruningResult& res, int ell, int max_b_len) {
    CheckReport report;
    report.name = "length_ratio";
    const auto& alphabet = res.h_pruned.outer();
    for (const auto& [u, v] : res.h_pruned.enumerate_pairs(max_b_len)) {
        ++report.checked;
        long long lu = static_cast<long long>(u.size());
        long long lv = static_cast<long long>(v.size());
        if (lu > static_cast<long long>(ell) * lv || lv > static_cast<long long>(ell) * lu)
            report.failures.push_back("(" + word_str(alphabet, u) + ", " + word_str(alphabet, v) +
                                      ")");
    }
    report.pass = report.failures.empty();
    report.vacuous = report.checked == 0;
    return report;
}

int MTable::lookup(int from, int to, const GroupElement& g) const {
    for (const auto& e : entries)
        if (e.from == from && e.to == to && e.element == g)
            return e.length;
    return 0;
}

int MTable::max_length_within(int n) const {
    int best = 0;
    for (const auto& e : entries)
        if (e.norm <= n)
            best = std::max(best, e.length);
    return best;
}

MTable m_table(const Dfa& k_dfa, const GroupOracle& oracle, int n, int depth_cap) {
    if (depth_cap < 1)
        throw std::invalid_argument("m_table: depth_cap must be positive");
    if (n < 0)
        throw std::invalid_argument("m_table: negative ball bound");
    MTable table;
    table.ball_bound = n;
    table.depth_cap = depth_cap;
    const int nsym = k_dfa.alphabet().size();

    for (int source = 0; source < k_dfa.num_states(); ++source) {
        struct Node {
            int state;
            GroupElement element;
            Word word;
        };
        std::map<std::pair<int, GroupElement>, int> seen;
        std::deque<Node> frontier{{source, oracle.identity(), {}}};
        seen.emplace(std::make_pair(source, oracle.identity()), 0);
        int depth = 0;
        while (!frontier.empty()) {
            // Configurations first reached at `depth` sit in the frontier;
            // record them, then expand one layer.
            for (const auto& node : frontier) {
                int nm = oracle.norm(node.element);
                if (nm <= n)
                    table.entries.push_back(
                        {source, node.state, node.element, nm, depth, node.word});
            }
            if (depth == depth_cap) {
                table.complete = false;  // frontier still growing at the cap
                break;
            }
            std::deque<Node> next;
            for (const auto& node : frontier)
                for (int c = 0; c < nsym; ++c) {
                    auto to = k_dfa.step(node.state, c);
                    if (!to)
                        continue;
                    GroupElement g = oracle.multiply(node.element, oracle.generator(c));
                    auto key = std::make_pair(*to, g);
                    if (seen.emplace(key, depth + 1).second) {
                        Word w = node.word;
                        w.push_back(c);
                        next.push_back({*to, std::move(g), std::move(w)});
                    }
                }
            frontier = std::move(next);
            ++depth;
        }
    }
    return table;
}

long long DepartureTable::d(int n) const {
    if (n < 0 || n > ball_bound)
        throw std::invalid_argument("departure table: n outside computed ball bound");
    return d_values[static_cast<size_t>(n)];
}

DepartureTable departure_function(const PruningResult& res, const GroupOracle& oracle, int n,
                                  int depth_cap) {
    DepartureTable table;
    Dfa k_dfa = minimize(determinize(res.dictionary_k));
    table.c = k_dfa.num_states();
    table.k = res.k;
    table.ell = length_ratio_bound(res.k);
    table.ball_bound = n;
    table.m = m_table(k_dfa, oracle, n, depth_cap);
    table.complete = table.m.complete;
    for (int i = 0; i <= n; ++i)
        table.d_values.push_back(2LL * table.c * table.ell +
                                 static_cast<long long>(table.ell) * table.m.max_length_within(i));
    return table;
}

CheckReport verify_departure(const Nfa& dictionary, const GroupOracle& oracle,
                             const DepartureTable& table, int n, int max_word_len) {
    CheckReport report;
    report.name = "departure";
    long long bound = table.d(n);
    report.vacuous = max_word_len <= bound;
    int min_observed = -1;
    for (const auto& w : enumerate(dictionary, max_word_len)) {
        const int len = static_cast<int>(w.size());
        for (int start = 0; start < len; ++start)
            for (int stop = start + 1; stop <= len; ++stop) {
                if (stop - start <= bound)
                    continue;
                Word y(w.begin() + start, w.begin() + stop);
                int nm = oracle.norm(oracle.evaluate(y));
                ++report.checked;
                if (min_observed < 0 || nm < min_observed)
                    min_observed = nm;
                if (nm < n)
                    report.failures.push_back(
                        "factor " + word_str(dictionary.alphabet(), y) + " of " +
                        word_str(dictionary.alphabet(), w) + " has norm " + std::to_string(nm) +
                        " < " + std::to_string(n));
            }
    }
    report.pass = report.failures.empty();
    if (report.checked == 0)
        report.vacuous = true;
    if (min_observed >= 0)
        report.notes.push_back("minimum factor norm observed: " + std::to_string(min_observed) +
                               " (required >= " + std::to_string(n) + ")");
    return report;
}

}  // namespace qad
