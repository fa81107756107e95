// End-to-end certification pipeline for one structure: validate the
// relations, prune the dictionary, then verify the factor, length-ratio,
// departure and geometry properties on the pruned structure. Soft failures
// accumulate in the report; exceptions from a stage stop the pipeline.
#ifndef QAD_PIPELINE_HPP
#define QAD_PIPELINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qad/departure.hpp"
#include "qad/geometry.hpp"
#include "qad/pruning.hpp"
#include "qad/report.hpp"
#include "qad/structure.hpp"

namespace qad {

struct PipelineOptions {
    int max_len = 5;    // word length bound for validation and geometry scans
    int ball = 3;       // norm bound for onto and departure checks
    int word_cap = 8;   // representative length cap for onto checks
    int depth_cap = 12; // breadth-first depth cap for the path-length table
};

struct StageError {
    std::string stage;
    std::string message;
};

struct PipelineReport {
    std::string label;
    PipelineOptions options;

    bool validated = false;
    ValidationReport validation;

    bool pruned = false;
    int k = 0;
    int dictionary_k_states = 0;
    // Trimmed debris automaton state counts per recognizer state, first and
    // second tape. A single-state automaton recognizes nothing here.
    std::vector<std::pair<int, int>> debris_states;
    CheckReport factor_property;
    CheckReport k_dictionary;
    CheckReport length_ratio;

    bool departed = false;
    DepartureTable departure;
    std::vector<CheckReport> departure_checks;  // one per norm 0..ball

    bool geometry_done = false;
    HausdorffReport hausdorff;
    WeakLipschitzReport weak_lipschitz;
    CheckReport implication;

    std::vector<StageError> errors;
    bool overall = false;
};

PipelineReport run_pipeline(const QuasiAutomaticStructure& s, const PipelineOptions& options,
                            const std::string& label = "");

std::string render_text(const PipelineReport& r);

// nlohmann ADL hooks: every report type serializes for the machine-readable
// mirror.
void to_json(nlohmann::json& j, const CheckReport& r);
void to_json(nlohmann::json& j, const ValidationFailure& f);
void to_json(nlohmann::json& j, const ValidationReport& r);
void to_json(nlohmann::json& j, const HausdorffReport& r);
void to_json(nlohmann::json& j, const WeakLipschitzReport& r);
void to_json(nlohmann::json& j, const DepartureTable& t);
void to_json(nlohmann::json& j, const StageError& e);
void to_json(nlohmann::json& j, const PipelineReport& r);

}  // namespace qad

#endif
