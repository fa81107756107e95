#include "qad/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace qad {

namespace {

std::vector<GroupElement> prefix_elements(const GroupOracle& oracle, const Word& w,
                                          bool include_empty) {
    std::vector<GroupElement> out;
    GroupElement acc = oracle.identity();
    if (include_empty)
        out.push_back(acc);
    for (int sym : w) {
        acc = oracle.multiply(acc, oracle.generator(sym));
        out.push_back(acc);
    }
    return out;
}

int directed_hausdorff(const GroupOracle& oracle, const std::vector<GroupElement>& from,
                       const std::vector<GroupElement>& to) {
    int worst = 0;
    for (const auto& p : from) {
        int best = -1;
        GroupElement pinv = oracle.inverse(p);
        for (const auto& q : to) {
            int d = oracle.norm(oracle.multiply(pinv, q));
            if (best < 0 || d < best)
                best = d;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

// Displacement grid for a word pair: cell (i, j) holds the word-metric
// distance between the i-prefix of u and the j-prefix of v.
std::vector<std::vector<int>> displacement_grid(const GroupOracle& oracle, const Word& u,
                                                const Word& v) {
    auto pu = prefix_elements(oracle, u, true);
    auto pv = prefix_elements(oracle, v, true);
    std::vector<std::vector<int>> grid(pu.size(), std::vector<int>(pv.size(), 0));
    for (size_t i = 0; i < pu.size(); ++i) {
        GroupElement inv = oracle.inverse(pu[i]);
        for (size_t j = 0; j < pv.size(); ++j)
            grid[i][j] = oracle.norm(oracle.multiply(inv, pv[j]));
    }
    return grid;
}

// Smallest bound k such that a monotone path from (0,0) to the far corner
// stays within k: bottleneck dynamic program over the grid.
int bottleneck_bound(const std::vector<std::vector<int>>& grid) {
    const size_t n = grid.size(), m = grid[0].size();
    std::vector<std::vector<int>> b(n, std::vector<int>(m, -1));
    b[0][0] = grid[0][0];
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == 0 && j == 0)
                continue;
            int best = -1;
            auto consider = [&](int prev) {
                if (prev >= 0 && (best < 0 || prev < best))
                    best = prev;
            };
            if (i > 0)
                consider(b[i - 1][j]);
            if (j > 0)
                consider(b[i][j - 1]);
            if (i > 0 && j > 0)
                consider(b[i - 1][j - 1]);
            b[i][j] = best < 0 ? -1 : std::max(best, grid[i][j]);
        }
    return b[n - 1][m - 1];
}

std::vector<std::pair<Word, Word>> close_pairs(const QuasiAutomaticStructure& s, int max_len) {
    std::vector<Word> words = enumerate(s.dictionary, max_len);
    std::vector<std::pair<Word, Word>> out;
    for (const auto& u : words)
        for (const auto& v : words)
            if (s.oracle.distance(u, v) <= 1)
                out.emplace_back(u, v);
    return out;
}

}  // namespace

Word Rewriting::left_word() const {
    Word w;
    for (const auto& step : steps)
        if (step.left)
            w.push_back(*step.left);
    return w;
}

Word Rewriting::right_word() const {
    Word w;
    for (const auto& step : steps)
        if (step.right)
            w.push_back(*step.right);
    return w;
}

std::pair<int, int> hausdorff_directed(const GroupOracle& oracle, const Word& u, const Word& v,
                                       bool include_empty_prefix) {
    auto pu = prefix_elements(oracle, u, include_empty_prefix);
    auto pv = prefix_elements(oracle, v, include_empty_prefix);
    if (pu.empty() || pv.empty())
        throw std::invalid_argument("hausdorff: empty prefix set (empty word without empty prefix)");
    return {directed_hausdorff(oracle, pu, pv), directed_hausdorff(oracle, pv, pu)};
}

int hausdorff_prefix_distance(const GroupOracle& oracle, const Word& u, const Word& v,
                              bool include_empty_prefix) {
    auto [a, b] = hausdorff_directed(oracle, u, v, include_empty_prefix);
    return std::max(a, b);
}

HausdorffReport check_lipschitz_hausdorff(const QuasiAutomaticStructure& s, int max_len) {
    s.check_well_formed();
    HausdorffReport report;
    const auto& alphabet = s.dictionary.alphabet();
    for (const auto& [u, v] : close_pairs(s, max_len)) {
        ++report.pairs_checked;
        int h = hausdorff_prefix_distance(s.oracle, u, v);
        if (h > report.k_observed) {
            report.k_observed = h;
            report.worst_pairs.clear();
        }
        if (h == report.k_observed)
            report.worst_pairs.push_back("(" + word_str(alphabet, u) + ", " +
                                         word_str(alphabet, v) + ")");
    }
    return report;
}

std::optional<Rewriting> weak_lipschitz_witness(const GroupOracle& oracle, const Word& u,
                                                const Word& v, int k) {
    if (k < 0)
        throw std::invalid_argument("weak_lipschitz_witness: negative bound");
    auto grid = displacement_grid(oracle, u, v);
    const size_t n = grid.size(), m = grid[0].size();
    if (grid[0][0] > k || grid[n - 1][m - 1] > k)
        return std::nullopt;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(m, false));
    reach[0][0] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            if ((i || j) && grid[i][j] <= k) {
                bool r = false;
                if (i > 0)
                    r = r || reach[i - 1][j];
                if (j > 0)
                    r = r || reach[i][j - 1];
                if (i > 0 && j > 0)
                    r = r || reach[i - 1][j - 1];
                reach[i][j] = r;
            }
        }
    if (!reach[n - 1][m - 1])
        return std::nullopt;
    // Walk back preferring the diagonal, then a left step, then a right step.
    Rewriting out;
    size_t i = n - 1, j = m - 1;
    while (i || j) {
        if (i > 0 && j > 0 && reach[i - 1][j - 1]) {
            out.steps.push_back({u[i - 1], v[j - 1]});
            --i;
            --j;
        } else if (i > 0 && reach[i - 1][j]) {
            out.steps.push_back({u[i - 1], std::nullopt});
            --i;
        } else {
            out.steps.push_back({std::nullopt, v[j - 1]});
            --j;
        }
    }
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
}

WeakLipschitzReport check_weak_lipschitz(const QuasiAutomaticStructure& s, int k, int max_len) {
    s.check_well_formed();
    WeakLipschitzReport report;
    report.k_given = k;
    const auto& alphabet = s.dictionary.alphabet();
    for (const auto& [u, v] : close_pairs(s, max_len)) {
        ++report.pairs_checked;
        auto grid = displacement_grid(s.oracle, u, v);
        int needed = bottleneck_bound(grid);
        report.k_required = std::max(report.k_required, needed);
        if (needed > k)
            report.failures.push_back("(" + word_str(alphabet, u) + ", " + word_str(alphabet, v) +
                                      ") needs displacement bound " + std::to_string(needed));
    }
    report.pass = report.failures.empty();
    return report;
}

CheckReport weak_implies_hausdorff_check(const QuasiAutomaticStructure& s, int k, int max_len) {
    s.check_well_formed();
    CheckReport report;
    report.name = "weak_implies_hausdorff";
    const auto& alphabet = s.dictionary.alphabet();
    for (const auto& [u, v] : close_pairs(s, max_len)) {
        if (!weak_lipschitz_witness(s.oracle, u, v, k))
            continue;  // no witness at this bound: nothing to imply
        ++report.checked;
        int h = hausdorff_prefix_distance(s.oracle, u, v);
        if (h > k)
            report.failures.push_back("(" + word_str(alphabet, u) + ", " + word_str(alphabet, v) +
                                      ") has witness at " + std::to_string(k) +
                                      " but Hausdorff distance " + std::to_string(h));
    }
    report.pass = report.failures.empty();
    report.vacuous = report.checked == 0;
    return report;
}

}  // namespace qad
