#pragma once

#include <optional>

#include "attinit/propagation.hpp"
#include "attinit/quaternion.hpp"
#include "attinit/types.hpp"

namespace attinit {

/**
 * Dynamic analytical attitude initializer.
 *
 * The current attitude is split as A(q_body_from_inertial) =
 * A(q_body_from_start) * A(q_start_from_inertial), where "start" is the body
 * frame frozen in inertial space at t = 0. The time-varying left factor is
 * dead-reckoned from raw gyro samples with a naturally known initial value
 * (identity). Each vector measurement is rotated back into the start frame,
 * which turns a stream of single-vector measurements taken at different times
 * into one joint Wahba problem for the constant right factor. That problem is
 * accumulated into a 4x4 symmetric matrix whose smallest-eigenvalue
 * eigenvector is the constant attitude; composing the two factors gives the
 * attitude estimate at every step.
 *
 * The gyro samples are used uncorrected: a gyro bias is not observable here
 * and leaks into the solution as a slowly growing error, which is why this
 * pipeline is meant for short initialization windows with a filter handoff.
 */

/// A body-frame unit vector paired with its inertial reference direction.
struct VectorObservationPair {
    Vec3 body;       ///< measured direction, body frame
    Vec3 reference;  ///< same direction, inertial frame
    double t_s = 0.0;

    VectorObservationPair(const Vec3& body_dir, const Vec3& reference_dir, double t_s);
};

/// The body measurement rotated into the frozen start frame.
struct ConstructedObservation {
    Vec3 start_frame;  ///< b rotated into the start frame
    Vec3 reference;
};

/// Left/right pure-quaternion multiplication matrices of one constructed
/// observation, laid out for scalar-last quaternions so that for any unit q
/// ||(b_plus - r_minus) q||^2 = ||b_bar - A(q) r||^2.
struct QuatObservationMatrices {
    Mat4 b_plus;
    Mat4 r_minus;
};

/// Running accumulation of the quadratic Wahba cost: q^T K q equals the
/// dt-weighted sum of squared residuals over everything absorbed so far.
struct DavenportAccumulator {
    Mat4 k = Mat4::Zero();  ///< symmetric PSD, units of seconds
    int n_obs = 0;
    double t_last_s = 0.0;
};

struct InitializerState {
    UnitQuaternion q_body_from_start;  ///< identity at step 0 by construction
    DavenportAccumulator accumulator;
    std::optional<UnitQuaternion> q_start_from_inertial;
    long step = 0;
};

/// Advance the start-to-body factor one gyro step. `gyro` is the raw sensor
/// output; no bias correction is applied here.
InitializerState step_propagate(const InitializerState& state, const AngularRate& gyro,
                                double dt_s);

/// Rotate the body measurement into the start frame. In the noiseless case the
/// result satisfies start_frame = A(q_start_from_inertial) * reference.
ConstructedObservation construct_observation(const UnitQuaternion& q_body_from_start,
                                             const VectorObservationPair& obs);

QuatObservationMatrices build_quat_matrices(const ConstructedObservation& c);

/// Absorb one observation: K += (b_plus - r_minus)^T (b_plus - r_minus) * dt,
/// then symmetrize.
DavenportAccumulator accumulate(const DavenportAccumulator& acc,
                                const QuatObservationMatrices& m, double dt_s);

/// Smallest-eigenvalue eigenvector of the accumulated matrix, sign-normalized
/// to non-negative scalar part. Throws InsufficientObservationsError for fewer
/// than two observations and DegenerateGeometryError when the two smallest
/// eigenvalues are not separated (relative gap < 1e-9), i.e. the observation
/// set is collinear.
UnitQuaternion solve_constant_attitude(const DavenportAccumulator& acc);

/// Composed estimate A(q_body_from_start) * A(q_start_from_inertial).
/// Throws NotReadyError until a constant-attitude solve has succeeded.
RotationMatrix current_attitude(const InitializerState& state);

/// Same composition as a quaternion.
UnitQuaternion current_attitude_quat(const InitializerState& state);

struct InitializerOptions {
    int solve_every = 1;  ///< re-solve the eigenproblem every N steps
};

/// One full cycle: propagate, construct, accumulate, and (on schedule) solve.
/// Solve failures for not-yet-determined geometry leave the previous solution
/// in place rather than throwing.
InitializerState initializer_step(const InitializerState& state, const AngularRate& gyro,
                                  double dt_s, const VectorObservationPair& obs,
                                  const InitializerOptions& options = {});

}  // namespace attinit
