#pragma once

#include <map>
#include <string>
#include <vector>

#include "attinit/monte_carlo.hpp"
#include "attinit/scenario.hpp"

namespace attinit {

struct ExperimentSpec {
    std::string name;
    ScenarioConfig scenario;
    std::vector<Method> methods;
    std::string outputs = "out";

    void validate() const;
    bool operator==(const ExperimentSpec& other) const;
};

/// Aggregated statistics for one (method, epoch) cell of the summary table.
struct SummaryRow {
    std::string method;
    double t_s = 0.0;
    double mean_err_deg = 0.0;
    double p95_err_deg = 0.0;  ///< nearest-rank 95th percentile over runs
    int runs = 0;              ///< successful runs behind the statistics
};

struct CaseOutcome {
    std::string curves_path;
    std::string summary_path;
    std::string plot_path;
    std::map<Method, MonteCarloResult> results;
    int failed_runs = 0;
};

struct SweepOutcome {
    std::string sweep_path;
    std::string plot_path;
    std::map<double, MonteCarloResult> results;  ///< keyed by bias in deg/h
    int failed_runs = 0;
};

/// The experiments shipped with the tool: case1..case4 (bias grade and
/// initial-error variations), bias_sweep, and a fast zero-noise smoke spec.
std::vector<ExperimentSpec> built_in_specs();

/// Lookup by name; throws ConfigError("case") when unknown.
ExperimentSpec find_built_in(const std::string& name);

/// One-line-per-spec description of the built-ins.
std::string list_cases();

/// Run every method of the spec and write <name>_curves.csv,
/// <name>_summary.csv and <name>_mean_err.svg under spec.outputs.
CaseOutcome run_case(const ExperimentSpec& spec);

/// Run the Optimal method across gyro-bias levels (deg/h per axis) and write
/// <name>_sweep.csv and <name>_sweep_mean_err.svg under base.outputs.
SweepOutcome run_bias_sweep(const ExperimentSpec& base, const std::vector<double>& biases_degph);

/// Nearest-rank p95 (index ceil(0.95 n) - 1 of the sorted sample).
double percentile95(std::vector<double> values);

}  // namespace attinit
