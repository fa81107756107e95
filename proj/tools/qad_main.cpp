// Command-line front end: load a structure (file or builtin), run the
// requested verification stage(s), print a report. Exit codes: 0 all checks
// pass, 1 a check fails or a stage errors out, 2 malformed input.
#include <algorithm>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qad/format.hpp"
#include "qad/pipeline.hpp"

namespace {

qad::QuasiAutomaticStructure load_input(const std::string& input) {
    auto names = qad::builtin_names();
    if (std::find(names.begin(), names.end(), input) != names.end())
        return qad::builtin(input);
    return qad::load_structure(input);
}

void print_check(const qad::CheckReport& r) {
    std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.vacuous)
        std::cout << " (vacuous)";
    std::cout << "  checked: " << r.checked << '\n';
    for (const auto& f : r.failures)
        std::cout << "  failure: " << f << '\n';
    for (const auto& n : r.notes)
        std::cout << "  note: " << n << '\n';
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const qad::QuasiAutomaticStructure& s, int max_len, bool json) {
    qad::ValidationReport r = qad::validate(s, max_len);
    std::cout << "validation: " << (r.pass ? "PASS" : "FAIL")
              << "  pairs checked: " << r.pairs_checked << '\n';
    for (const auto& f : r.failures)
        std::cout << "  " << f.kind << " failure in " << f.relation << ": (" << f.u << ", " << f.v
                  << ")\n";
    if (json)
        print_json(r);
    return r.pass ? 0 : 1;
}

int cmd_prove(const qad::QuasiAutomaticStructure& s, const qad::PipelineOptions& options,
              const std::string& label, bool json) {
    qad::PipelineReport r = qad::run_pipeline(s, options, label);
    std::cout << qad::render_text(r);
    if (json)
        print_json(r);
    return r.overall ? 0 : 1;
}

int cmd_prune(const qad::QuasiAutomaticStructure& s, bool json) {
    s.check_well_formed();
    qad::PruningResult res = qad::prune(s.dictionary, s.relations.at(qad::kEpsilonRelation));
    bool factor = qad::verify_factor_property(res);
    std::cout << "silent factor bound k: " << res.k << '\n';
    std::cout << "pruned dictionary states: " << qad::trim(res.dictionary_k).num_states() << '\n';
    std::cout << "debris states per recognizer state (first/second tape):";
    for (size_t q = 0; q < res.per_state.size(); ++q)
        std::cout << "  " << q << ": " << res.per_state[q].first_tape.num_states() << '/'
                  << res.per_state[q].second_tape.num_states();
    std::cout << '\n';
    std::cout << "factor_property: " << (factor ? "PASS" : "FAIL") << '\n';
    if (json) {
        nlohmann::json debris = nlohmann::json::array();
        for (const auto& d : res.per_state)
            debris.push_back({d.first_tape.num_states(), d.second_tape.num_states()});
        print_json({{"k", res.k},
                    {"dictionary_k_states", qad::trim(res.dictionary_k).num_states()},
                    {"debris_states", debris},
                    {"factor_property", factor}});
    }
    return factor ? 0 : 1;
}

int cmd_departure(const qad::QuasiAutomaticStructure& s, int ball, int depth_cap, bool json) {
    s.check_well_formed();
    qad::PruningResult res = qad::prune(s.dictionary, s.relations.at(qad::kEpsilonRelation));
    qad::DepartureTable table = qad::departure_function(res, s.oracle, ball, depth_cap);
    std::cout << "recognizer states c: " << table.c << "  length ratio bound: " << table.ell
              << "  table complete: " << (table.complete ? "yes" : "no") << '\n';
    for (int n = 0; n <= table.ball_bound; ++n)
        std::cout << "D(" << n << ") = " << table.d(n) << '\n';
    bool all_ok = true;
    std::vector<qad::CheckReport> checks;
    for (int n = 0; n <= table.ball_bound; ++n) {
        long long cap = std::min<long long>(table.d(n) + 6, 24);
        qad::CheckReport check =
            qad::verify_departure(res.dictionary_k, s.oracle, table, n, static_cast<int>(cap));
        check.name = "departure n=" + std::to_string(n);
        print_check(check);
        all_ok = all_ok && (check.pass || check.vacuous);
        checks.push_back(std::move(check));
    }
    if (json)
        print_json({{"table", table}, {"checks", checks}});
    return all_ok ? 0 : 1;
}

int cmd_geometry(const qad::QuasiAutomaticStructure& s, int max_len, bool json) {
    qad::HausdorffReport h = qad::check_lipschitz_hausdorff(s, max_len);
    qad::WeakLipschitzReport w =
        qad::check_weak_lipschitz(s, std::numeric_limits<int>::max(), max_len);
    w.k_given = w.k_required;
    qad::CheckReport imp = qad::weak_implies_hausdorff_check(s, w.k_required, max_len);
    std::cout << "prefix-set Hausdorff bound observed: " << h.k_observed
              << "  pairs: " << h.pairs_checked << '\n';
    std::cout << "weak displacement bound required: " << w.k_required
              << "  pairs: " << w.pairs_checked << '\n';
    print_check(imp);
    if (json)
        print_json({{"hausdorff", h}, {"weak_lipschitz", w}, {"implication", imp}});
    return (w.pass && (imp.pass || imp.vacuous)) ? 0 : 1;
}

int cmd_demo(const std::string& name, std::string out_path) {
    auto names = qad::builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::cerr << "unknown builtin '" << name << "'; available:";
        for (const auto& n : names)
            std::cerr << ' ' << n;
        std::cerr << '\n';
        return 2;
    }
    if (out_path.empty())
        out_path = name + ".qad";
    qad::save_structure(qad::builtin(name), out_path);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-automatic structure toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string out_path;
    qad::PipelineOptions options;
    bool json = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "structure file or builtin name")->required();
        cmd->add_flag("--json", json, "also emit the machine-readable mirror");
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "two-sided relation check against the oracle");
    add_input(validate_cmd);
    validate_cmd->add_option("--max-len", options.max_len, "word length bound");

    CLI::App* prove_cmd = app.add_subcommand("prove", "full verification pipeline");
    add_input(prove_cmd);
    prove_cmd->add_option("--max-len", options.max_len, "word length bound");
    prove_cmd->add_option("--ball", options.ball, "norm bound for departure and onto checks");
    prove_cmd->add_option("--word-cap", options.word_cap, "representative length cap");
    prove_cmd->add_option("--depth-cap", options.depth_cap, "path table depth cap");

    CLI::App* prune_cmd = app.add_subcommand("prune", "dictionary pruning and factor property");
    add_input(prune_cmd);

    CLI::App* departure_cmd = app.add_subcommand("departure", "departure bounds on the pruned dictionary");
    add_input(departure_cmd);
    departure_cmd->add_option("--ball", options.ball, "norm bound");
    departure_cmd->add_option("--depth-cap", options.depth_cap, "path table depth cap");

    CLI::App* geometry_cmd = app.add_subcommand("geometry", "Hausdorff and displacement bounds");
    add_input(geometry_cmd);
    geometry_cmd->add_option("--max-len", options.max_len, "word length bound");

    CLI::App* demo_cmd = app.add_subcommand("demo", "write a builtin structure file");
    demo_cmd->add_option("name", input, "builtin name")->required();
    demo_cmd->add_option("-o,--out", out_path, "output path (default NAME.qad)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(demo_cmd))
        return cmd_demo(input, out_path);

    std::optional<qad::QuasiAutomaticStructure> s;
    try {
        s = load_input(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(validate_cmd))
            return cmd_validate(*s, options.max_len, json);
        if (app.got_subcommand(prove_cmd))
            return cmd_prove(*s, options, input, json);
        if (app.got_subcommand(prune_cmd))
            return cmd_prune(*s, json);
        if (app.got_subcommand(departure_cmd))
            return cmd_departure(*s, options.ball, options.depth_cap, json);
        if (app.got_subcommand(geometry_cmd))
            return cmd_geometry(*s, options.max_len, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
