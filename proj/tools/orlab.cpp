// Experiment runner for the weighted-norm workbench: loads a JSON config
// naming a suite and corpus entries, executes it, and writes JSON/CSV/SVG
// reports. Exit codes: 0 all pass, 1 counterexample candidate flagged,
// 2 config error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orlab/corpus.hpp"
#include "orlab/io.hpp"
#include "orlab/norms.hpp"
#include "orlab/suites.hpp"
#include "orlab/weights.hpp"

namespace {

int cmd_run(const std::string& config_path) {
    nlohmann::json j;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config '" << config_path << "'\n";
            return 2;
        }
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
            return 2;
        }
    }
    const auto cfg = orlab::ExperimentConfig::from_json(j);
    const auto bundle = orlab::run_experiment(cfg);
    orlab::write_bundle(bundle, cfg.output_dir);

    int passed = 0;
    for (const auto& r : bundle.result.rows) passed += r.pass ? 1 : 0;
    std::cout << bundle.result.suite << ": " << passed << "/"
              << bundle.result.rows.size() << " rows pass; reports in "
              << cfg.output_dir << "\n";
    for (const auto& r : bundle.result.rows)
        if (!r.pass)
            std::cout << "  FAIL " << r.entry << " n=" << r.n
                      << " constant=" << r.constant
                      << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
    return bundle.result.counterexample ? 1 : 0;
}

int cmd_list_suites() {
    for (const auto& s : orlab::suite_registry())
        std::cout << s.name << "\t" << s.anchor << "\t" << s.description << "\n";
    return 0;
}

int cmd_norm(const std::string& fn_name, const std::string& growth_json,
             const std::string& measure_name, int n) {
    const auto& corpus = orlab::standard_corpus();
    const auto g = orlab::standard_grid(n);
    const auto f = corpus.function(fn_name).gen(g);
    const auto A = orlab::growth_from_json(nlohmann::json::parse(growth_json));
    const auto mu = orlab::WeightedMeasure(corpus.weight(measure_name).gen(g));
    nlohmann::json out;
    out["function"] = fn_name;
    out["growth"] = orlab::to_json(A);
    out["measure"] = measure_name;
    out["n"] = n;
    out["luxemburg"] = orlab::to_json(orlab::luxemburg(f, A, mu));
    out["weak_orlicz"] = orlab::to_json(orlab::weak_orlicz(f, A, mu));
    out["orlicz_lorentz_b1"] = orlab::to_json(orlab::orlicz_lorentz_b1(f, A, mu));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_weight_constant(const std::string& weight_name, double p, int n) {
    const auto& corpus = orlab::standard_corpus();
    const auto g = orlab::standard_grid(n);
    const auto w = corpus.weight(weight_name).gen(g);
    nlohmann::json out;
    out["weight"] = weight_name;
    out["n"] = n;
    out["p"] = p;
    out["constant"] = p > 1.0 ? orlab::ap_constant(w, p) : orlab::a1_constant(w);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orlab: numerical workbench for weighted weak Orlicz norm inequalities"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run a suite from a JSON config");
    run->add_option("config", config_path, "path to the experiment config")->required();

    auto* list = app.add_subcommand("list-suites", "print the registered suites");

    std::string fn_name, growth_json, measure_name = "one";
    int n = 1024;
    auto* norm = app.add_subcommand("norm", "single-shot norm calculator");
    norm->add_option("--fn", fn_name, "corpus function name")->required();
    norm->add_option("--growth", growth_json, "growth function as JSON")->required();
    norm->add_option("--measure", measure_name, "corpus weight for the measure");
    norm->add_option("--n", n, "grid resolution");

    std::string weight_name;
    double p = 1.0;
    auto* wc = app.add_subcommand("weight-constant", "weight constant estimator");
    wc->add_option("--weight", weight_name, "corpus weight name")->required();
    wc->add_option("--p", p, "exponent (1 selects the A_1 estimator)");
    wc->add_option("--n", n, "grid resolution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (list->parsed()) return cmd_list_suites();
        if (norm->parsed()) return cmd_norm(fn_name, growth_json, measure_name, n);
        if (wc->parsed()) return cmd_weight_constant(weight_name, p, n);
    } catch (const orlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
