#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "attinit/mekf.hpp"
#include "attinit/scenario.hpp"

namespace attinit {

enum class Method {
    Optimal,          ///< analytical initializer run over the whole window
    OptimalPlusMekf,  ///< initializer for the init phase, then filter handoff
    MekfOnly,         ///< filter from t = 0 with a perturbed initial attitude
};

const char* to_string(Method m);
std::optional<Method> method_from_string(const std::string& name);

struct RunResult {
    std::vector<double> err_deg;  ///< one entry per epoch
    bool failed = false;
    std::string failure;
    Vec3 true_bias_rad_s = Vec3::Zero();
    std::optional<MekfState> final_filter;  ///< present for the MEKF methods
};

struct MonteCarloResult {
    std::vector<double> t_s;      ///< epoch times
    std::vector<RunResult> runs;  ///< size mc_runs; failed runs carry no curve

    int successful_runs() const;
    /// Mean error over successful runs at one epoch index.
    double mean_at(int epoch_index) const;
};

/// Optional per-step inspection hook (used by the consistency checks);
/// receives the filter state after each update.
using FilterStepHook = std::function<void(const MekfState&)>;

/// One seeded run. run_seed = cfg.seed + run_index.
RunResult run_single(const ScenarioConfig& cfg, Method method, int run_index,
                     const FilterStepHook& hook = {});

/// The full seeded batch: runs use seeds cfg.seed + 0 .. cfg.seed + mc_runs-1
/// and are independent, so the result is reproducible and order-free.
MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, Method method,
                                 const FilterStepHook& hook = {});

}  // namespace attinit
