#pragma once

#include "attinit/davenport.hpp"
#include "attinit/propagation.hpp"
#include "attinit/quaternion.hpp"
#include "attinit/types.hpp"

namespace attinit {

/**
 * Multiplicative extended Kalman filter over a 6-state error vector
 * [attitude error (rad); gyro bias error (rad/s)]. The quaternion is the
 * global state; the filtered error is injected multiplicatively and reset to
 * zero after every update.
 */

struct MekfConfig {
    double sigma_v_rad = 3.16e-7;  ///< gyro white noise density, rad/s/sqrt(Hz)
    double sigma_u_rad = 1e-10;    ///< bias random walk density, rad/s^(3/2); 0 allowed
    double r_scalar_rad2 = 2.909e-5 * 2.909e-5;  ///< per-axis measurement variance, rad^2
    double dt_s = 1.0;

    void validate() const;
};

struct MekfState {
    UnitQuaternion q;                ///< body-from-inertial estimate
    Vec3 bias_rad_s = Vec3::Zero();  ///< gyro bias estimate
    Mat6 cov = Mat6::Identity();     ///< [attitude rad^2 | cross | bias (rad/s)^2]
    double t_s = 0.0;

    /// Max asymmetry and most negative eigenvalue scaled by trace; used by the
    /// consistency checks.
    double max_asymmetry() const;
    double min_eigenvalue() const;
};

/// Propagate with the bias-corrected gyro sample: quaternion via the exact
/// constant-rate transition, covariance via Phi = I + F dt + F^2 dt^2/2 with
/// F = [[-(w x), -I],[0, 0]] and the matching discrete process noise.
MekfState mekf_propagate(const MekfState& s, const AngularRate& gyro, const MekfConfig& cfg);

/// Vector-observation update: 3x1 residual b - A(q) r, sensitivity
/// [ (A(q) r) x , 0 ], gain from the innovation covariance (throws
/// SingularUpdateError past condition number 1e12), multiplicative quaternion
/// correction, Joseph-form covariance update.
MekfState mekf_update(const MekfState& s, const VectorObservationPair& obs,
                      const MekfConfig& cfg);

/// Seed the filter from the analytical initializer: zero bias estimate and a
/// block-diagonal covariance from the given standard deviations.
MekfState handoff_from_initializer(const UnitQuaternion& q_init, double att_std_deg,
                                   double bias_std_rad_s);

}  // namespace attinit
