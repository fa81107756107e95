// Departure bounds: once the pruned relation has no long silent factors, a
// pair of related words can only drift apart linearly (length ratio), and a
// factor much longer than D(n) must represent an element of norm >= n.
#ifndef QAD_DEPARTURE_HPP
#define QAD_DEPARTURE_HPP

#include <vector>

#include "qad/group.hpp"
#include "qad/pruning.hpp"
#include "qad/report.hpp"

namespace qad {

// The silent-factor bound k gives the two-sided length ratio 2k.
int length_ratio_bound(int k);

// Checks |u| <= ell * |v| and |v| <= ell * |u| on every enumerated pair of
// the pruned relation up to the inner word length bound.
CheckReport verify_length_ratio(const PruningResult& res, int ell, int max_b_len);

struct MEntry {
    int from = 0;
    int to = 0;
    GroupElement element;
    int norm = 0;
    int length = 0;  // minimal word length from `from` to `to` evaluating to element
    Word witness;
};

// Minimal path lengths m(q, q', g) in a deterministic dictionary recognizer,
// one entry per reachable (q', g) with norm(g) <= n. Breadth-first per source
// state, cut at depth_cap; `complete` is true only when every search
// exhausted its frontier before the cap, making the entries exhaustive.
struct MTable {
    std::vector<MEntry> entries;
    bool complete = true;
    int ball_bound = 0;
    int depth_cap = 0;

    // Recorded minimal length, or 0 when absent (the empty-word convention
    // makes m(q, q, identity) = 0 an actual entry).
    int lookup(int from, int to, const GroupElement& g) const;
    int max_length_within(int n) const;
};

MTable m_table(const Dfa& k_dfa, const GroupOracle& oracle, int n, int depth_cap);

struct DepartureTable {
    int c = 0;    // states of the trimmed minimal recognizer of K
    int k = 0;
    int ell = 0;  // 2k
    int ball_bound = 0;
    bool complete = true;  // false: D values are lower estimates
    MTable m;
    std::vector<long long> d_values;  // D(0) .. D(ball_bound)

    long long d(int n) const;
};

// D(n) = 2 c ell + ell * max{ m(q, q', g) : norm(g) <= n }.
DepartureTable departure_function(const PruningResult& res, const GroupOracle& oracle, int n,
                                  int depth_cap);

// Exhaustive scan: every factorization w = xyz of every dictionary word with
// |w| <= max_word_len and |y| > D(n) must have norm(y) >= n. Reports vacuity
// when max_word_len <= D(n) (no factorization can qualify).
CheckReport verify_departure(const Nfa& dictionary, const GroupOracle& oracle,
                             const DepartureTable& table, int n, int max_word_len);

}  // namespace qad

#endif
