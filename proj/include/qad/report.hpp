// Small result records shared by the verification passes. All string fields
// are deterministic for fixed inputs so reports stay byte-stable.
#ifndef QAD_REPORT_HPP
#define QAD_REPORT_HPP

#include <string>
#include <vector>

namespace qad {

struct CheckReport {
    std::string name;
    bool pass = true;
    // A vacuous check inspected nothing (for departure scans: the word cap
    // does not exceed the bound, so no factorization qualifies).
    bool vacuous = false;
    long long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct ValidationFailure {
    std::string relation;  // "eps" or a generator display
    std::string kind;      // "soundness" or "completeness"
    std::string u;
    std::string v;
};

struct ValidationReport {
    bool pass = true;
    long long pairs_checked = 0;
    std::vector<ValidationFailure> failures;
};

}  // namespace qad

#endif
