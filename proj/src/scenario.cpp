#include "attinit/scenario.hpp"

#include <cmath>

#include "attinit/errors.hpp"

namespace attinit {

void ScenarioConfig::validate() const {
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        throw ConfigError("dt_s", "must be finite and > 0");
    }
    if (!(init_phase_s > 0.0) || !std::isfinite(init_phase_s)) {
        throw ConfigError("init_phase_s", "must be finite and > 0");
    }
    if (!(duration_s >= init_phase_s) || !std::isfinite(duration_s)) {
        throw ConfigError("duration_s", "must be finite and >= init_phase_s");
    }
    if (mc_runs < 1) {
        throw ConfigError("mc_runs", "must be >= 1");
    }
    if (truth_substeps < 1) {
        throw ConfigError("truth_substeps", "must be >= 1");
    }
    if (solve_every < 1) {
        throw ConfigError("solve_every", "must be >= 1");
    }
    if (!(rate_profile.osc_period_s > 0.0)) {
        throw ConfigError("osc_period_s", "must be > 0");
    }
    if (!(sigma_v_rad >= 0.0) || !std::isfinite(sigma_v_rad)) {
        throw ConfigError("sigma_v_rad", "must be finite and >= 0");
    }
    if (!(sigma_star_rad >= 0.0) || !std::isfinite(sigma_star_rad)) {
        throw ConfigError("sigma_star_rad", "must be finite and >= 0");
    }
    if (!(sigma_u_rad >= 0.0) || !std::isfinite(sigma_u_rad)) {
        throw ConfigError("sigma_u_rad", "must be finite and >= 0");
    }
    if (!(r_scalar_rad2 >= 0.0) || !std::isfinite(r_scalar_rad2)) {
        throw ConfigError("r_scalar_rad2", "must be finite and >= 0");
    }
    if (!(mekf_att_std_deg >= 0.0) || !(handoff_att_std_deg >= 0.0) ||
        !(bias_std_degph >= 0.0)) {
        throw ConfigError("mekf_att_std_deg", "covariance stds must be >= 0");
    }
    if (!gyro_bias_degph.allFinite() || !init_att_err_deg.allFinite()) {
        throw ConfigError("gyro_bias_degph", "vector fields must be finite");
    }
}

namespace {

// Quaternion kinematics right-hand side: dq/dt = 0.5 * M(w(t)) * q, with M the
// scalar-last left-multiplication matrix of the pure quaternion w.
Vec4 quat_rate(const Vec3& w, const Vec4& q) {
    Vec4 dq;
    dq.head<3>() = 0.5 * (q(3) * w - w.cross(Vec3(q.head<3>())));
    dq(3) = -0.5 * w.dot(q.head<3>());
    return dq;
}

Vec4 rk4_substep(const RateProfile& profile, double t, double h, const Vec4& q) {
    const Vec3 w0 = profile.at(t);
    const Vec3 wm = profile.at(t + 0.5 * h);
    const Vec3 w1 = profile.at(t + h);
    const Vec4 k1 = quat_rate(w0, q);
    const Vec4 k2 = quat_rate(wm, q + 0.5 * h * k1);
    const Vec4 k3 = quat_rate(wm, q + 0.5 * h * k2);
    const Vec4 k4 = quat_rate(w1, q + h * k3);
    Vec4 next = q + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    return next / next.norm();
}

}  // namespace

std::vector<TruthSample> generate_truth(const ScenarioConfig& cfg, const UnitQuaternion& q0) {
    const int n = cfg.epoch_count();
    const double h = cfg.dt_s / cfg.truth_substeps;

    std::vector<TruthSample> out;
    out.reserve(n + 1);
    out.push_back({0.0, q0, cfg.rate_profile.at(0.0)});

    Vec4 q = q0.coeffs();
    for (int k = 1; k <= n; ++k) {
        const double t0 = (k - 1) * cfg.dt_s;
        for (int s = 0; s < cfg.truth_substeps; ++s) {
            q = rk4_substep(cfg.rate_profile, t0 + s * h, h, q);
        }
        const double t = k * cfg.dt_s;
        out.push_back({t, UnitQuaternion::normalized_from(q), cfg.rate_profile.at(t)});
    }
    return out;
}

Vec3 step_average_rate(const UnitQuaternion& q_prev, const UnitQuaternion& q_next,
                       double dt_s) {
    const UnitQuaternion delta = compose(q_next, q_prev.conjugate());
    return delta.to_rotation_vector() / dt_s;
}

std::vector<AngularRate> generate_gyro(const std::vector<TruthSample>& truth,
                                       const Vec3& bias_rad_s, double sigma_v_rad,
                                       double dt_s, Rng& rng) {
    std::vector<AngularRate> out;
    out.reserve(truth.size() > 0 ? truth.size() - 1 : 0);
    const double noise_std = sigma_v_rad / std::sqrt(dt_s);
    for (std::size_t k = 1; k < truth.size(); ++k) {
        const Vec3 rate = step_average_rate(truth[k - 1].q_body_from_inertial,
                                            truth[k].q_body_from_inertial, dt_s);
        out.emplace_back(rate + bias_rad_s + rng.gaussian_vec3(noise_std));
    }
    return out;
}

VectorObservationPair generate_star_obs(const UnitQuaternion& q_true, double t_s,
                                        double sigma_star_rad, Rng& rng) {
    const Vec3 reference = rng.unit_vector();
    Vec3 body = q_true.transform(reference) + rng.gaussian_vec3(sigma_star_rad);
    body.normalize();
    return VectorObservationPair(body, reference, t_s);
}

UnitQuaternion initial_truth_attitude(std::uint64_t run_seed) {
    Rng rng(run_seed);
    return UnitQuaternion::normalized_from(rng.unit_quaternion_coeffs());
}

std::vector<Epoch> generate_epochs(const ScenarioConfig& cfg, std::uint64_t run_seed) {
    cfg.validate();
    Rng rng(run_seed);
    const UnitQuaternion q0 = UnitQuaternion::normalized_from(rng.unit_quaternion_coeffs());
    const std::vector<TruthSample> truth = generate_truth(cfg, q0);

    const Vec3 bias_rad_s = cfg.gyro_bias_degph.unaryExpr(&deg_per_hour_to_rad_per_s);
    const double noise_std = cfg.sigma_v_rad / std::sqrt(cfg.dt_s);

    std::vector<Epoch> epochs;
    epochs.reserve(truth.size() - 1);
    for (std::size_t k = 1; k < truth.size(); ++k) {
        const Vec3 rate = step_average_rate(truth[k - 1].q_body_from_inertial,
                                            truth[k].q_body_from_inertial, cfg.dt_s);
        const AngularRate gyro(rate + bias_rad_s + rng.gaussian_vec3(noise_std));
        const VectorObservationPair obs = generate_star_obs(
            truth[k].q_body_from_inertial, truth[k].t_s, cfg.sigma_star_rad, rng);
        epochs.push_back({truth[k].t_s, gyro, obs, truth[k].q_body_from_inertial});
    }
    return epochs;
}

}  // namespace attinit
