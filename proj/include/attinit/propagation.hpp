#pragma once

#include "attinit/quaternion.hpp"
#include "attinit/types.hpp"

namespace attinit {

/// Body angular rate relative to the inertial frame, rad/s.
struct AngularRate {
    Vec3 rad_s = Vec3::Zero();

    AngularRate() = default;
    explicit AngularRate(const Vec3& w);
    AngularRate(double x, double y, double z) : AngularRate(Vec3(x, y, z)) {}
};

/**
 * One step of the exact constant-rate quaternion transition.
 *
 * For rate w held over dt the quaternion advances as q_k = T * q_{k-1} with
 *
 *   T = [ c*I - [p x]   p ]        c = cos(0.5*|w|*dt)
 *       [    -p^T       c ],       p = sin(0.5*|w|*dt) * w/|w|
 *
 * laid out for scalar-last quaternions. T is orthogonal (it is the
 * left-multiplication matrix of a unit quaternion), so propagating with -w
 * undoes propagating with +w. Below |w| = 1e-12 rad/s the analytic limit
 * p = 0.5*w*dt, c = 1 is used.
 */
struct PropagationStep {
    Mat4 transition = Mat4::Identity();
    double dt_s = 0.0;

    static PropagationStep from_rate(const AngularRate& rate, double dt_s);

    UnitQuaternion apply(const UnitQuaternion& q) const;
};

/// Advance q by rate over dt (builds and applies one PropagationStep),
/// renormalizing the result. Throws InvalidInputError for non-finite rate
/// or dt <= 0.
UnitQuaternion propagate(const UnitQuaternion& q, const AngularRate& rate, double dt_s);

}  // namespace attinit
