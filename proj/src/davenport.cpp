#include "attinit/davenport.hpp"

#include <cmath>

#include "attinit/errors.hpp"
#include "attinit/jacobi_eigen.hpp"

namespace attinit {

namespace {

Vec3 checked_unit_vec(const Vec3& v, const char* what) {
    if (!v.allFinite()) {
        throw InvalidInputError(std::string(what) + " must be finite");
    }
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw InvalidInputError(std::string(what) + " must be a unit vector (1e-9)");
    }
    return v;
}

}  // namespace

VectorObservationPair::VectorObservationPair(const Vec3& body_dir, const Vec3& reference_dir,
                                             double t)
    : body(checked_unit_vec(body_dir, "body direction")),
      reference(checked_unit_vec(reference_dir, "reference direction")),
      t_s(t) {}

InitializerState step_propagate(const InitializerState& state, const AngularRate& gyro,
                                double dt_s) {
    InitializerState next = state;
    next.q_body_from_start = propagate(state.q_body_from_start, gyro, dt_s);
    next.step = state.step + 1;
    return next;
}

ConstructedObservation construct_observation(const UnitQuaternion& q_body_from_start,
                                             const VectorObservationPair& obs) {
    // Start-frame coordinates of the measured direction: apply the inverse
    // of the start-to-body rotation.
    ConstructedObservation c;
    c.start_frame = q_body_from_start.conjugate().transform(obs.body);
    c.reference = obs.reference;
    return c;
}

QuatObservationMatrices build_quat_matrices(const ConstructedObservation& c) {
    const Vec3 b = checked_unit_vec(c.start_frame, "constructed observation");
    const Vec3 r = checked_unit_vec(c.reference, "reference direction");

    QuatObservationMatrices m;
    // Left multiplication by the pure quaternion b, scalar-last layout.
    m.b_plus.topLeftCorner<3, 3>() = -skew(b);
    m.b_plus.topRightCorner<3, 1>() = b;
    m.b_plus.bottomLeftCorner<1, 3>() = -b.transpose();
    m.b_plus(3, 3) = 0.0;
    // Right multiplication by the pure quaternion r.
    m.r_minus.topLeftCorner<3, 3>() = skew(r);
    m.r_minus.topRightCorner<3, 1>() = r;
    m.r_minus.bottomLeftCorner<1, 3>() = -r.transpose();
    m.r_minus(3, 3) = 0.0;
    return m;
}

DavenportAccumulator accumulate(const DavenportAccumulator& acc,
                                const QuatObservationMatrices& m, double dt_s) {
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        throw InvalidInputError("accumulate requires finite dt > 0");
    }
    const Mat4 d = m.b_plus - m.r_minus;
    DavenportAccumulator next = acc;
    next.k += (d.transpose() * d) * dt_s;
    next.k = 0.5 * (next.k + Mat4(next.k.transpose()));
    next.n_obs = acc.n_obs + 1;
    next.t_last_s = acc.t_last_s + dt_s;
    return next;
}

UnitQuaternion solve_constant_attitude(const DavenportAccumulator& acc) {
    if (acc.n_obs < 2) {
        throw InsufficientObservationsError(
            "constant-attitude solve needs at least two observations");
    }
    const SymmetricEigen<4> eig = eigh4(acc.k);
    const double scale = std::max(std::abs(eig.eigenvalues(3)), 1e-300);
    if ((eig.eigenvalues(1) - eig.eigenvalues(0)) / scale < 1e-9) {
        throw DegenerateGeometryError(
            "observation set is collinear; constant attitude is not unique");
    }

    Vec4 q = eig.eigenvectors.col(0);
    if (std::abs(q(3)) < 1e-12) {
        int m = 0;
        q.cwiseAbs().maxCoeff(&m);
        if (q(m) < 0.0) {
            q = -q;
        }
    } else if (q(3) < 0.0) {
        q = -q;
    }
    return UnitQuaternion::normalized_from(q);
}

UnitQuaternion current_attitude_quat(const InitializerState& state) {
    if (!state.q_start_from_inertial.has_value()) {
        throw NotReadyError("constant attitude has not been solved yet");
    }
    return compose(state.q_body_from_start, *state.q_start_from_inertial);
}

RotationMatrix current_attitude(const InitializerState& state) {
    return current_attitude_quat(state).to_rotation_matrix();
}

InitializerState initializer_step(const InitializerState& state, const AngularRate& gyro,
                                  double dt_s, const VectorObservationPair& obs,
                                  const InitializerOptions& options) {
    InitializerState next = step_propagate(state, gyro, dt_s);
    const ConstructedObservation c = construct_observation(next.q_body_from_start, obs);
    next.accumulator = accumulate(next.accumulator, build_quat_matrices(c), dt_s);

    const int cadence = options.solve_every > 0 ? options.solve_every : 1;
    if (next.step % cadence == 0 || !next.q_start_from_inertial.has_value()) {
        try {
            next.q_start_from_inertial = solve_constant_attitude(next.accumulator);
        } catch (const InsufficientObservationsError&) {
        } catch (const DegenerateGeometryError&) {
            // Keep the previous solution until the geometry opens up.
        }
    }
    return next;
}

}  // namespace attinit
