#include "attinit/monte_carlo.hpp"

#include <cmath>

#include "attinit/errors.hpp"

namespace attinit {

const char* to_string(Method m) {
    switch (m) {
        case Method::Optimal: return "Optimal";
        case Method::OptimalPlusMekf: return "OptimalPlusMekf";
        case Method::MekfOnly: return "MekfOnly";
    }
    return "?";
}

std::optional<Method> method_from_string(const std::string& name) {
    if (name == "Optimal") return Method::Optimal;
    if (name == "OptimalPlusMekf") return Method::OptimalPlusMekf;
    if (name == "MekfOnly") return Method::MekfOnly;
    return std::nullopt;
}

int MonteCarloResult::successful_runs() const {
    int n = 0;
    for (const auto& r : runs) {
        n += r.failed ? 0 : 1;
    }
    return n;
}

double MonteCarloResult::mean_at(int epoch_index) const {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : runs) {
        if (!r.failed) {
            sum += r.err_deg.at(epoch_index);
            ++n;
        }
    }
    return n > 0 ? sum / n : std::nan("");
}

namespace {

/// Estimate of the initializer at an epoch: the composed attitude once the
/// constant part is solved, the dead-reckoned factor alone before that.
UnitQuaternion initializer_estimate(const InitializerState& state) {
    if (state.q_start_from_inertial.has_value()) {
        return current_attitude_quat(state);
    }
    return state.q_body_from_start;
}

MekfConfig filter_config(const ScenarioConfig& cfg) {
    MekfConfig fc;
    fc.sigma_v_rad = cfg.sigma_v_rad;
    fc.sigma_u_rad = cfg.sigma_u_rad;
    fc.r_scalar_rad2 = cfg.r_scalar_rad2;
    fc.dt_s = cfg.dt_s;
    return fc;
}

MekfState initial_standalone_filter(const ScenarioConfig& cfg, const UnitQuaternion& q_true0) {
    const Vec3 err_rad = cfg.init_att_err_deg * kRadPerDeg;
    const UnitQuaternion q_err =
        UnitQuaternion::from_euler_321(err_rad.x(), err_rad.y(), err_rad.z());
    MekfState s = handoff_from_initializer(
        compose(q_err, q_true0), cfg.mekf_att_std_deg,
        deg_per_hour_to_rad_per_s(cfg.bias_std_degph));
    return s;
}

}  // namespace

RunResult run_single(const ScenarioConfig& cfg, Method method, int run_index,
                     const FilterStepHook& hook) {
    cfg.validate();
    const std::uint64_t run_seed = cfg.seed + static_cast<std::uint64_t>(run_index);
    const std::vector<Epoch> epochs = generate_epochs(cfg, run_seed);

    RunResult result;
    result.true_bias_rad_s = cfg.gyro_bias_degph.unaryExpr(&deg_per_hour_to_rad_per_s);
    result.err_deg.reserve(epochs.size());

    const MekfConfig fc = filter_config(cfg);
    const InitializerOptions init_opts{cfg.solve_every};

    InitializerState init_state;
    std::optional<MekfState> filter;
    if (method == Method::MekfOnly) {
        filter = initial_standalone_filter(cfg, initial_truth_attitude(run_seed));
    }

    try {
        for (const Epoch& epoch : epochs) {
            UnitQuaternion estimate;
            if (filter.has_value()) {
                filter = mekf_propagate(*filter, epoch.gyro, fc);
                filter = mekf_update(*filter, epoch.obs, fc);
                if (hook) {
                    hook(*filter);
                }
                estimate = filter->q;
            } else {
                init_state = initializer_step(init_state, epoch.gyro, cfg.dt_s, epoch.obs,
                                              init_opts);
                estimate = initializer_estimate(init_state);
                if (method == Method::OptimalPlusMekf && epoch.t_s >= cfg.init_phase_s) {
                    filter = handoff_from_initializer(
                        estimate, cfg.handoff_att_std_deg,
                        deg_per_hour_to_rad_per_s(cfg.bias_std_degph));
                    filter->t_s = epoch.t_s;
                }
            }
            result.err_deg.push_back(attitude_error_deg(estimate, epoch.q_true));
        }
    } catch (const Error& e) {
        result.failed = true;
        result.failure = e.what();
        result.err_deg.clear();
        return result;
    }

    if (filter.has_value()) {
        result.final_filter = filter;
    }
    return result;
}

MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, Method method,
                                 const FilterStepHook& hook) {
    cfg.validate();
    MonteCarloResult out;
    out.t_s.reserve(cfg.epoch_count());
    for (int k = 1; k <= cfg.epoch_count(); ++k) {
        out.t_s.push_back(k * cfg.dt_s);
    }
    out.runs.reserve(cfg.mc_runs);
    for (int i = 0; i < cfg.mc_runs; ++i) {
        out.runs.push_back(run_single(cfg, method, i, hook));
    }
    return out;
}

}  // namespace attinit
