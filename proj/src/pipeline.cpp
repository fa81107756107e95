#include "qad/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace qad {

namespace {

bool ok(const CheckReport& r) { return r.pass || r.vacuous; }

void render_check(std::ostringstream& out, const CheckReport& r) {
    out << r.name << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.vacuous)
        out << " (vacuous)";
    out << "  checked: " << r.checked << '\n';
    for (const auto& f : r.failures)
        out << "  failure: " << f << '\n';
    for (const auto& n : r.notes)
        out << "  note: " << n << '\n';
}

}  // namespace

PipelineReport run_pipeline(const QuasiAutomaticStructure& s, const PipelineOptions& options,
                            const std::string& label) {
    PipelineReport r;
    r.label = label;
    r.options = options;

    try {
        s.check_well_formed();
        r.validation = validate(s, options.max_len);
        r.validated = true;
    } catch (const std::exception& e) {
        r.errors.push_back({"validate", e.what()});
        return r;
    }

    std::optional<PruningResult> pruned;
    try {
        pruned = prune(s.dictionary, s.relations.at(kEpsilonRelation));
    } catch (const std::exception& e) {
        r.errors.push_back({"prune", e.what()});
        return r;
    }
    const PruningResult& res = *pruned;
    r.pruned = true;
    r.k = res.k;
    r.dictionary_k_states = trim(res.dictionary_k).num_states();
    for (const auto& d : res.per_state)
        r.debris_states.emplace_back(d.first_tape.num_states(), d.second_tape.num_states());

    try {
        r.factor_property.name = "factor_property";
        r.factor_property.pass = verify_factor_property(res);
        r.factor_property.checked = 1;

        r.k_dictionary = verify_k_dictionary(res, s.oracle, options.ball, options.word_cap);

        int ell = length_ratio_bound(res.k);
        r.length_ratio = verify_length_ratio(res, ell, 2 * options.max_len);

        r.departure = departure_function(res, s.oracle, options.ball, options.depth_cap);
        r.departed = true;
        for (int n = 0; n <= options.ball; ++n) {
            long long cap = std::min<long long>(r.departure.d(n) + 6, 24);
            CheckReport check = verify_departure(res.dictionary_k, s.oracle, r.departure, n,
                                                 static_cast<int>(cap));
            check.name = "departure n=" + std::to_string(n);
            r.departure_checks.push_back(std::move(check));
        }

        QuasiAutomaticStructure sk = restrict_to(s, res.dictionary_k);
        r.hausdorff = check_lipschitz_hausdorff(sk, options.max_len);
        r.weak_lipschitz =
            check_weak_lipschitz(sk, std::numeric_limits<int>::max(), options.max_len);
        // Report the minimal bound the scan established, not the sentinel.
        r.weak_lipschitz.k_given = r.weak_lipschitz.k_required;
        r.implication = weak_implies_hausdorff_check(sk, r.weak_lipschitz.k_required,
                                                     options.max_len);
        r.geometry_done = true;
    } catch (const std::exception& e) {
        r.errors.push_back({"verify", e.what()});
    }

    r.overall = r.errors.empty() && r.validation.pass && r.factor_property.pass &&
                ok(r.k_dictionary) && ok(r.length_ratio) && r.geometry_done &&
                r.weak_lipschitz.pass && ok(r.implication) &&
                std::all_of(r.departure_checks.begin(), r.departure_checks.end(),
                            [](const CheckReport& c) { return ok(c); });
    return r;
}

std::string render_text(const PipelineReport& r) {
    std::ostringstream out;
    if (!r.label.empty())
        out << "structure: " << r.label << '\n';

    out << "== validation ==\n";
    if (r.validated) {
        out << "pass: " << (r.validation.pass ? "yes" : "no")
            << "  pairs checked: " << r.validation.pairs_checked << '\n';
        for (const auto& f : r.validation.failures)
            out << "  " << f.kind << " failure in " << f.relation << ": (" << f.u << ", " << f.v
                << ")\n";
    }

    if (r.pruned) {
        out << "== pruning ==\n";
        out << "silent factor bound k: " << r.k << '\n';
        out << "pruned dictionary states: " << r.dictionary_k_states << '\n';
        out << "debris states per recognizer state (first/second tape):";
        for (size_t q = 0; q < r.debris_states.size(); ++q)
            out << "  " << q << ": " << r.debris_states[q].first << '/'
                << r.debris_states[q].second;
        out << '\n';
        render_check(out, r.factor_property);
        render_check(out, r.k_dictionary);
        render_check(out, r.length_ratio);
    }

    if (r.departed) {
        out << "== departure ==\n";
        out << "recognizer states c: " << r.departure.c << "  length ratio bound: "
            << r.departure.ell << "  table complete: " << (r.departure.complete ? "yes" : "no")
            << '\n';
        for (int n = 0; n <= r.departure.ball_bound; ++n)
            out << "D(" << n << ") = " << r.departure.d(n) << '\n';
        for (const auto& c : r.departure_checks)
            render_check(out, c);
    }

    if (r.geometry_done) {
        out << "== geometry ==\n";
        out << "prefix-set Hausdorff bound observed: " << r.hausdorff.k_observed
            << "  pairs: " << r.hausdorff.pairs_checked << '\n';
        out << "weak displacement bound required: " << r.weak_lipschitz.k_required
            << "  pairs: " << r.weak_lipschitz.pairs_checked << '\n';
        render_check(out, r.implication);
    }

    for (const auto& e : r.errors)
        out << "error in " << e.stage << ": " << e.message << '\n';
    out << "overall: " << (r.overall ? "PASS" : "FAIL") << '\n';
    return out.str();
}

void to_json(nlohmann::json& j, const CheckReport& r) {
    j = {{"name", r.name},         {"pass", r.pass},
         {"vacuous", r.vacuous},   {"checked", r.checked},
         {"failures", r.failures}, {"notes", r.notes}};
}

void to_json(nlohmann::json& j, const ValidationFailure& f) {
    j = {{"relation", f.relation}, {"kind", f.kind}, {"u", f.u}, {"v", f.v}};
}

void to_json(nlohmann::json& j, const ValidationReport& r) {
    j = {{"pass", r.pass}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures}};
}

void to_json(nlohmann::json& j, const HausdorffReport& r) {
    j = {{"pass", r.pass},
         {"k_observed", r.k_observed},
         {"pairs_checked", r.pairs_checked},
         {"worst_pairs", r.worst_pairs}};
}

void to_json(nlohmann::json& j, const WeakLipschitzReport& r) {
    j = {{"pass", r.pass},
         {"k_given", r.k_given},
         {"k_required", r.k_required},
         {"pairs_checked", r.pairs_checked},
         {"failures", r.failures}};
}

void to_json(nlohmann::json& j, const DepartureTable& t) {
    j = {{"c", t.c},
         {"k", t.k},
         {"ell", t.ell},
         {"ball_bound", t.ball_bound},
         {"complete", t.complete},
         {"d_values", t.d_values},
         {"m_entries", t.m.entries.size()}};
}

void to_json(nlohmann::json& j, const StageError& e) {
    j = {{"stage", e.stage}, {"message", e.message}};
}

void to_json(nlohmann::json& j, const PipelineReport& r) {
    j = nlohmann::json::object();
    if (!r.label.empty())
        j["structure"] = r.label;
    j["options"] = {{"max_len", r.options.max_len},
                    {"ball", r.options.ball},
                    {"word_cap", r.options.word_cap},
                    {"depth_cap", r.options.depth_cap}};
    if (r.validated)
        j["validation"] = r.validation;
    if (r.pruned) {
        nlohmann::json debris = nlohmann::json::array();
        for (const auto& [f, s] : r.debris_states)
            debris.push_back({f, s});
        j["pruning"] = {{"k", r.k},
                        {"dictionary_k_states", r.dictionary_k_states},
                        {"debris_states", debris},
                        {"factor_property", r.factor_property},
                        {"k_dictionary", r.k_dictionary},
                        {"length_ratio", r.length_ratio}};
    }
    if (r.departed)
        j["departure"] = {{"table", r.departure}, {"checks", r.departure_checks}};
    if (r.geometry_done)
        j["geometry"] = {{"hausdorff", r.hausdorff},
                         {"weak_lipschitz", r.weak_lipschitz},
                         {"implication", r.implication}};
    j["errors"] = r.errors;
    j["overall"] = r.overall;
}

}  // namespace qad
