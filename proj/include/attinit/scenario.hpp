#pragma once

#include <cstdint>
#include <vector>

#include "attinit/davenport.hpp"
#include "attinit/propagation.hpp"
#include "attinit/quaternion.hpp"
#include "attinit/rng.hpp"
#include "attinit/types.hpp"

namespace attinit {

/// Smooth deterministic body-rate profile: a slow pitch revolution (one turn
/// per orbit) with small oscillating roll/yaw components that keep the
/// constructed-observation geometry well spread.
struct RateProfile {
    double osc_amplitude_rad_s = 0.05 * kRadPerDeg;
    double osc_period_s = 600.0;
    double orbit_rate_rad_s = 2.0 * kPi / 5400.0;

    Vec3 at(double t_s) const {
        const double phase = 2.0 * kPi * t_s / osc_period_s;
        return Vec3(osc_amplitude_rad_s * std::sin(phase), orbit_rate_rad_s,
                    osc_amplitude_rad_s * std::cos(phase));
    }
};

/// Everything that defines one Monte Carlo experiment: truth trajectory,
/// sensor grades, initializer window, filter tuning, batch size and seed.
struct ScenarioConfig {
    // Truth and timing
    double duration_s = 5400.0;
    double dt_s = 1.0;
    RateProfile rate_profile;
    int truth_substeps = 10;

    // Sensors
    Vec3 gyro_bias_degph = Vec3(0.1, 0.1, 0.1);
    double sigma_v_rad = 3.16e-7;     ///< gyro white noise density, rad/s/sqrt(Hz)
    double sigma_star_rad = 2.909e-5; ///< per-axis star measurement noise, rad

    // Initializer window and its solve cadence
    double init_phase_s = 300.0;
    int solve_every = 1;

    // Filter tuning
    double sigma_u_rad = 1e-10;          ///< bias random-walk density, rad/s^(3/2)
    double r_scalar_rad2 = 2.909e-5 * 2.909e-5;  ///< per-axis measurement variance
    Vec3 init_att_err_deg = Vec3(10.0, 10.0, 30.0);  ///< standalone-filter initial error
    double mekf_att_std_deg = 10.0;      ///< standalone-filter initial attitude std
    double handoff_att_std_deg = 0.1;    ///< post-initializer attitude std
    double bias_std_degph = 0.1;         ///< initial gyro-bias std, all filters

    // Batch
    int mc_runs = 50;
    std::uint64_t seed = 20260808ULL;

    int epoch_count() const { return static_cast<int>(duration_s / dt_s + 0.5); }

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

struct TruthSample {
    double t_s = 0.0;
    UnitQuaternion q_body_from_inertial;
    Vec3 omega_rad_s = Vec3::Zero();  ///< instantaneous profile rate at t_s
};

/// One simulation step: the gyro sample covering (t-dt, t], the single star
/// observation taken at t, and the true attitude at t.
struct Epoch {
    double t_s = 0.0;
    AngularRate gyro;
    VectorObservationPair obs;
    UnitQuaternion q_true;
};

/// Truth attitude history at the epoch grid (index 0 holds t = 0), integrated
/// with RK4 at dt/truth_substeps from a caller-chosen initial attitude.
std::vector<TruthSample> generate_truth(const ScenarioConfig& cfg,
                                        const UnitQuaternion& q0 = UnitQuaternion());

/// Equivalent constant rate reproducing the rotation from q_prev to q_next
/// over dt: the rotation vector of the relative quaternion divided by dt.
Vec3 step_average_rate(const UnitQuaternion& q_prev, const UnitQuaternion& q_next,
                       double dt_s);

/// Gyro samples for each step k = 1..N: the step's equivalent rate plus the
/// constant bias plus white noise of per-axis std sigma_v/sqrt(dt).
std::vector<AngularRate> generate_gyro(const std::vector<TruthSample>& truth,
                                       const Vec3& bias_rad_s, double sigma_v_rad,
                                       double dt_s, Rng& rng);

/// One star observation: a fresh uniformly random inertial direction, rotated
/// into the body frame, perturbed per-axis, and renormalized.
VectorObservationPair generate_star_obs(const UnitQuaternion& q_true, double t_s,
                                        double sigma_star_rad, Rng& rng);

/// Full per-run measurement stream. The run's truth starts at a random
/// attitude drawn from the same stream, so each (cfg, seed) pair maps to
/// exactly one sequence.
std::vector<Epoch> generate_epochs(const ScenarioConfig& cfg, std::uint64_t run_seed);

/// True initial attitude for the same run seed (what generate_epochs used).
UnitQuaternion initial_truth_attitude(std::uint64_t run_seed);

}  // namespace attinit
