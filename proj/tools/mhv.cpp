#include "mhv/errors.hpp"
#include "mhv/seed_parser.hpp"
#include "mhv/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int cmd_verify(const std::string& config_path, const std::string& out_override, int jobs,
               std::uint64_t seed) {
    mhv::Config config = mhv::Config::load(config_path);
    mhv::Report report = mhv::run_suites(config, seed, jobs);
    std::string out_path = out_override.empty() ? config.out_path : out_override;
    if (!out_path.empty()) {
        mhv::emit_report(report, out_path);
        std::cout << "report written to " << out_path << "\n";
    }
    std::cout << report.text_summary();
    return report.pass() ? 0 : 1;
}

int cmd_probe(const std::string& config_path, const std::string& module_name,
              const std::string& seed_expr) {
    mhv::Config config = mhv::Config::load(config_path);
    auto it = config.modules.find(module_name);
    if (it == config.modules.end())
        mhv::fail("ConfigError", "module '" + module_name + "' is not defined in the config");
    mhv::Vector seed = mhv::parse_seed(seed_expr, it->second);
    mhv::ProbeOutcome out = mhv::probe_submodule(seed, config.caps);
    nlohmann::json j = mhv::probe_outcome_to_json(out);
    j["module"] = module_name;
    j["seed"] = seed_expr;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_criteria(const std::string& config_path, int jobs, std::uint64_t seed) {
    mhv::Config config = mhv::Config::load(config_path);
    mhv::SuiteContext ctx{config, seed, jobs};
    mhv::Report report;
    report.suites.push_back(mhv::run_criteria_grid_suite(ctx));
    std::cout << report.text_summary();
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification tool for modules over the mirror Heisenberg-Virasoro algebra"};
    app.require_subcommand(1);

    std::string config_path, out_path, module_name, seed_expr;
    int jobs = 1;
    std::uint64_t seed = 20240101;

    auto* verify = app.add_subcommand("verify", "run the configured suites and emit a report");
    verify->add_option("--config", config_path, "config file (JSON)")->required();
    verify->add_option("--out", out_path, "report output path (overrides config)");
    verify->add_option("--jobs", jobs, "worker threads for grid sweeps");
    verify->add_option("--seed", seed, "PRNG seed for randomized property suites");

    auto* probe = app.add_subcommand("probe", "probe one module from a seed expression");
    probe->add_option("--config", config_path, "config file (JSON)")->required();
    probe->add_option("--module", module_name, "module name from the config")->required();
    probe->add_option("--seed-expr", seed_expr, "seed expression, e.g. 'h(-1/2) * w'")->required();

    auto* criteria = app.add_subcommand("criteria", "run only the criteria concordance grid");
    criteria->add_option("--config", config_path, "config file (JSON)")->required();
    criteria->add_option("--jobs", jobs, "worker threads for grid sweeps");
    criteria->add_option("--seed", seed, "PRNG seed for randomized evidence probes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(config_path, out_path, jobs, seed);
        if (probe->parsed()) return cmd_probe(config_path, module_name, seed_expr);
        if (criteria->parsed()) return cmd_criteria(config_path, jobs, seed);
    } catch (const mhv::MhvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
