// Cayley-graph geometry of a dictionary: Hausdorff distance between prefix
// sets of neighbouring words, and aligned rewritings with bounded
// displacement (the weak property implies the Hausdorff one).
#ifndef QAD_GEOMETRY_HPP
#define QAD_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qad/report.hpp"
#include "qad/structure.hpp"

namespace qad {

// One aligned rewriting step: a letter or the empty word on each side.
struct RewriteStep {
    std::optional<int> left;
    std::optional<int> right;
};

struct Rewriting {
    std::vector<RewriteStep> steps;

    Word left_word() const;
    Word right_word() const;
};

// Symmetrized Hausdorff distance between the prefix sets of u and v in the
// word metric. Prefix sets include the empty prefix by default; the switch
// records the alternative convention.
int hausdorff_prefix_distance(const GroupOracle& oracle, const Word& u, const Word& v,
                              bool include_empty_prefix = true);
// Both one-sided maxima (u over v, v over u), for reporting.
std::pair<int, int> hausdorff_directed(const GroupOracle& oracle, const Word& u, const Word& v,
                                       bool include_empty_prefix = true);

struct HausdorffReport {
    bool pass = true;
    int k_observed = 0;
    long long pairs_checked = 0;
    std::vector<std::string> worst_pairs;  // pairs attaining k_observed
};

// Scans all dictionary word pairs of length <= max_len at word-metric
// distance <= 1 and reports the largest prefix-set Hausdorff distance.
HausdorffReport check_lipschitz_hausdorff(const QuasiAutomaticStructure& s, int max_len);

// An aligned rewriting of u into v whose every intermediate pair of prefixes
// stays within displacement k, or nullopt when none exists. Dynamic program
// over prefix pairs; the displacement of a cell does not depend on the path.
std::optional<Rewriting> weak_lipschitz_witness(const GroupOracle& oracle, const Word& u,
                                                const Word& v, int k);

struct WeakLipschitzReport {
    bool pass = true;
    int k_given = 0;
    // Smallest displacement bound that admits witnesses for every checked
    // pair at this length bound.
    int k_required = 0;
    long long pairs_checked = 0;
    std::vector<std::string> failures;
};

WeakLipschitzReport check_weak_lipschitz(const QuasiAutomaticStructure& s, int k, int max_len);

// For every close pair with a weak witness at k, the prefix-set Hausdorff
// distance must be <= k as well.
CheckReport weak_implies_hausdorff_check(const QuasiAutomaticStructure& s, int k, int max_len);

}  // namespace qad

#endif
