#include "attinit/quaternion.hpp"

#include <cmath>

#include "attinit/errors.hpp"

namespace attinit {

namespace {

Vec4 checked_unit(const Vec4& q) {
    if (!q.allFinite()) {
        throw InvalidInputError("quaternion components must be finite");
    }
    const double n = q.norm();
    if (std::abs(n - 1.0) > 1e-6) {
        throw InvalidInputError("quaternion norm deviates from 1 by more than 1e-6");
    }
    return q / n;
}

}  // namespace

UnitQuaternion::UnitQuaternion(double x, double y, double z, double w)
    : q_(checked_unit(Vec4(x, y, z, w))) {}

UnitQuaternion::UnitQuaternion(const Vec4& xyzw) : q_(checked_unit(xyzw)) {}

UnitQuaternion UnitQuaternion::normalized_from(const Vec4& xyzw) {
    if (!xyzw.allFinite()) {
        throw InvalidInputError("quaternion components must be finite");
    }
    const double n = xyzw.norm();
    if (n < 1e-12) {
        throw InvalidInputError("cannot normalize a near-zero quaternion");
    }
    return UnitQuaternion(xyzw / n, Unchecked{});
}

UnitQuaternion UnitQuaternion::from_axis_angle(const Vec3& axis, double angle_rad) {
    const double n = axis.norm();
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(angle_rad)) {
        throw InvalidInputError("axis-angle requires a finite, nonzero axis and finite angle");
    }
    const double half = 0.5 * angle_rad;
    Vec4 q;
    q.head<3>() = std::sin(half) * (axis / n);
    q(3) = std::cos(half);
    return UnitQuaternion(q, Unchecked{});
}

UnitQuaternion UnitQuaternion::from_rotation_vector(const Vec3& rotvec) {
    if (!rotvec.allFinite()) {
        throw InvalidInputError("rotation vector must be finite");
    }
    const double angle = rotvec.norm();
    if (angle < 1e-12) {
        // sin(a/2)/a -> 1/2 as a -> 0
        Vec4 q;
        q.head<3>() = 0.5 * rotvec;
        q(3) = 1.0;
        return normalized_from(q);
    }
    return from_axis_angle(rotvec, angle);
}

UnitQuaternion UnitQuaternion::from_euler_321(double roll, double pitch, double yaw) {
    return compose(from_axis_angle(Vec3::UnitX(), roll),
                   compose(from_axis_angle(Vec3::UnitY(), pitch),
                           from_axis_angle(Vec3::UnitZ(), yaw)));
}

UnitQuaternion UnitQuaternion::from_rotation_matrix(const Mat3& m) {
    // Shepperd's method. Note the DCM convention A = (w^2 - |v|^2) I + 2 v v^T - 2 w [v x],
    // whose off-diagonal differences carry the opposite sign from the rotation-operator
    // convention, hence m(1,2) - m(2,1) etc. below.
    Vec4 q;
    const double tr = m.trace();
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;  // s = 4w
        q(3) = 0.25 * s;
        q(0) = (m(1, 2) - m(2, 1)) / s;
        q(1) = (m(2, 0) - m(0, 2)) / s;
        q(2) = (m(0, 1) - m(1, 0)) / s;
    } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;  // s = 4x
        q(3) = (m(1, 2) - m(2, 1)) / s;
        q(0) = 0.25 * s;
        q(1) = (m(0, 1) + m(1, 0)) / s;
        q(2) = (m(2, 0) + m(0, 2)) / s;
    } else if (m(1, 1) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;  // s = 4y
        q(3) = (m(2, 0) - m(0, 2)) / s;
        q(0) = (m(0, 1) + m(1, 0)) / s;
        q(1) = 0.25 * s;
        q(2) = (m(1, 2) + m(2, 1)) / s;
    } else {
        double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;  // s = 4z
        q(3) = (m(0, 1) - m(1, 0)) / s;
        q(0) = (m(2, 0) + m(0, 2)) / s;
        q(1) = (m(1, 2) + m(2, 1)) / s;
        q(2) = 0.25 * s;
    }
    return normalized_from(q);
}

UnitQuaternion UnitQuaternion::conjugate() const {
    return UnitQuaternion(Vec4(-q_(0), -q_(1), -q_(2), q_(3)), Unchecked{});
}

Vec3 UnitQuaternion::to_rotation_vector() const {
    const double vn = vec().norm();
    const double angle = 2.0 * std::atan2(vn, std::abs(w()));
    if (vn < 1e-15) {
        return Vec3::Zero();
    }
    const Vec3 axis = (w() >= 0.0 ? 1.0 : -1.0) * vec() / vn;
    return angle * axis;
}

RotationMatrix UnitQuaternion::to_rotation_matrix() const {
    const double n = q_.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-6) {
        throw InvalidInputError("quaternion norm deviates from 1 by more than 1e-6");
    }
    const Vec3 v = vec();
    const double s = w();
    Mat3 m = (s * s - v.squaredNorm()) * Mat3::Identity() + 2.0 * (v * v.transpose()) -
             2.0 * s * skew(v);
    return RotationMatrix(m, RotationMatrix::Unchecked{});
}

Vec3 UnitQuaternion::transform(const Vec3& r) const {
    const Vec3 v = vec();
    const Vec3 t = 2.0 * v.cross(r);
    return r - w() * t + v.cross(t);
}

UnitQuaternion compose(const UnitQuaternion& q1, const UnitQuaternion& q2) {
    const Vec3 v1 = q1.vec();
    const Vec3 v2 = q2.vec();
    const double w1 = q1.w();
    const double w2 = q2.w();
    Vec4 out;
    // Product with the cross term signed so that A(q1 (x) q2) = A(q1) A(q2).
    out.head<3>() = w1 * v2 + w2 * v1 - v1.cross(v2);
    out(3) = w1 * w2 - v1.dot(v2);
    return UnitQuaternion::normalized_from(out);
}

double attitude_error_deg(const UnitQuaternion& q_est, const UnitQuaternion& q_true) {
    const UnitQuaternion dq = compose(q_est, q_true.conjugate());
    return 2.0 * std::atan2(dq.vec().norm(), std::abs(dq.w())) * kDegPerRad;
}

RotationMatrix RotationMatrix::from_matrix(const Mat3& m) {
    if (!m.allFinite()) {
        throw InvalidInputError("rotation matrix entries must be finite");
    }
    const double ortho = (m * m.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff();
    if (ortho > 1e-10) {
        throw InvalidInputError("matrix is not orthonormal within 1e-10");
    }
    if (std::abs(m.determinant() - 1.0) > 1e-10) {
        throw InvalidInputError("matrix determinant is not +1 within 1e-10");
    }
    return RotationMatrix(m, Unchecked{});
}

double RotationMatrix::angle_to_deg(const RotationMatrix& reference) const {
    const Mat3 rel = m_ * reference.m_.transpose();
    const double c = std::min(1.0, std::max(-1.0, 0.5 * (rel.trace() - 1.0)));
    return std::acos(c) * kDegPerRad;
}

}  // namespace attinit
