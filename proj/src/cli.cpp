#include "attinit/cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "attinit/config_io.hpp"
#include "attinit/errors.hpp"
#include "attinit/experiment.hpp"

namespace attinit {

namespace {

ExperimentSpec resolve_spec(const std::string& case_or_path) {
    for (const ExperimentSpec& spec : built_in_specs()) {
        if (spec.name == case_or_path) {
            return spec;
        }
    }
    if (std::filesystem::exists(case_or_path)) {
        return load_spec_file(case_or_path);
    }
    throw ConfigError("case", "'" + case_or_path +
                                  "' is neither a built-in case nor a config file path");
}

void apply_overrides(ExperimentSpec& spec, const std::string& out_dir,
                     const std::vector<std::string>& methods, long long seed,
                     int mc_runs) {
    if (!out_dir.empty()) {
        spec.outputs = out_dir;
    }
    if (seed >= 0) {
        spec.scenario.seed = static_cast<std::uint64_t>(seed);
    }
    if (mc_runs > 0) {
        spec.scenario.mc_runs = mc_runs;
    }
    if (!methods.empty()) {
        spec.methods.clear();
        for (const std::string& name : methods) {
            const auto m = method_from_string(name);
            if (!m) {
                throw ConfigError("methods", "unknown method '" + name + "'");
            }
            spec.methods.push_back(*m);
        }
    }
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"attitude-estimator initialization experiments"};
    app.require_subcommand(1);

    std::string run_target;
    std::string sweep_target = "bias_sweep";
    std::string out_dir;
    std::vector<std::string> methods;
    long long seed = -1;
    int mc_runs = 0;
    std::vector<double> biases;

    CLI::App* run = app.add_subcommand("run", "run one experiment case");
    run->add_option("case", run_target, "built-in case name or config file path")->required();
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--mc-runs", mc_runs, "override the Monte Carlo run count");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--methods", methods, "comma-separated method list")->delimiter(',');

    CLI::App* sweep = app.add_subcommand("sweep", "run the Optimal method across gyro biases");
    sweep->add_option("case", sweep_target, "base case name or config file path");
    sweep->add_option("--biases", biases, "bias levels in deg/h")->delimiter(',')->required();
    sweep->add_option("--seed", seed, "override the scenario seed");
    sweep->add_option("--mc-runs", mc_runs, "override the Monte Carlo run count");
    sweep->add_option("--out", out_dir, "output directory");

    CLI::App* list = app.add_subcommand("list", "list the built-in cases");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help() << std::flush;
            return kExitOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        if (list->parsed()) {
            std::cout << list_cases() << std::flush;
            return kExitOk;
        }
        if (run->parsed()) {
            ExperimentSpec spec = resolve_spec(run_target);
            apply_overrides(spec, out_dir, methods, seed, mc_runs);
            const CaseOutcome outcome = run_case(spec);
            std::cout << "wrote " << outcome.curves_path << "\n"
                      << "wrote " << outcome.summary_path << "\n";
            if (outcome.failed_runs > 0) {
                std::cerr << "warning: " << outcome.failed_runs
                          << " run(s) failed; partial results written\n";
                return kExitNumericalFailure;
            }
            return kExitOk;
        }
        // sweep
        ExperimentSpec spec = resolve_spec(sweep_target);
        apply_overrides(spec, out_dir, {}, seed, mc_runs);
        const SweepOutcome outcome = run_bias_sweep(spec, biases);
        std::cout << "wrote " << outcome.sweep_path << "\n";
        if (outcome.failed_runs > 0) {
            std::cerr << "warning: " << outcome.failed_runs
                      << " run(s) failed; partial results written\n";
            return kExitNumericalFailure;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
}

}  // namespace attinit
