#include "attinit/propagation.hpp"

#include <cmath>

#include "attinit/errors.hpp"

namespace attinit {

AngularRate::AngularRate(const Vec3& w) : rad_s(w) {
    if (!w.allFinite()) {
        throw InvalidInputError("angular rate components must be finite");
    }
}

PropagationStep PropagationStep::from_rate(const AngularRate& rate, double dt_s) {
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        throw InvalidInputError("propagation step requires finite dt > 0");
    }
    const Vec3& w = rate.rad_s;
    const double wn = w.norm();

    double c;
    Vec3 p;
    if (wn < 1e-12) {
        c = 1.0;
        p = 0.5 * dt_s * w;
    } else {
        const double half_angle = 0.5 * wn * dt_s;
        c = std::cos(half_angle);
        p = (std::sin(half_angle) / wn) * w;
    }

    PropagationStep step;
    step.dt_s = dt_s;
    step.transition.topLeftCorner<3, 3>() = c * Mat3::Identity() - skew(p);
    step.transition.topRightCorner<3, 1>() = p;
    step.transition.bottomLeftCorner<1, 3>() = -p.transpose();
    step.transition(3, 3) = c;
    return step;
}

UnitQuaternion PropagationStep::apply(const UnitQuaternion& q) const {
    return UnitQuaternion::normalized_from(transition * q.coeffs());
}

UnitQuaternion propagate(const UnitQuaternion& q, const AngularRate& rate, double dt_s) {
    return PropagationStep::from_rate(rate, dt_s).apply(q);
}

}  // namespace attinit
