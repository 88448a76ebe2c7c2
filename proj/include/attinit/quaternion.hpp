#pragma once

#include "attinit/types.hpp"

namespace attinit {

class RotationMatrix;

/**
 * Unit attitude quaternion, stored scalar-LAST: [x, y, z, w], identity = [0, 0, 0, 1].
 *
 * Conventions used throughout this library:
 *  - A quaternion q_B_A represents the attitude of frame B relative to frame A;
 *    its rotation matrix transforms coordinates, v_B = A(q_B_A) * v_A.
 *  - Composition satisfies A(compose(q1, q2)) = A(q1) * A(q2), so
 *    q_C_A = compose(q_C_B, q_B_A) chains like the matrices do.
 *  - q and -q represent the same attitude; comparisons and error metrics are
 *    double-cover aware.
 *
 * Every constructor and operation leaves the stored norm within 1e-12 of one.
 */
class UnitQuaternion {
public:
    /// Identity attitude [0, 0, 0, 1].
    UnitQuaternion() : q_(0.0, 0.0, 0.0, 1.0) {}

    /// From components; throws InvalidInputError unless the norm is within
    /// 1e-6 of one (then renormalizes exactly).
    UnitQuaternion(double x, double y, double z, double w);

    /// From a scalar-last 4-vector, same norm contract as above.
    explicit UnitQuaternion(const Vec4& xyzw);

    /// Normalizes an arbitrary non-tiny 4-vector onto the unit sphere.
    static UnitQuaternion normalized_from(const Vec4& xyzw);

    static UnitQuaternion identity() { return UnitQuaternion(); }

    /// Rotation by `angle_rad` about a (not necessarily unit) axis.
    static UnitQuaternion from_axis_angle(const Vec3& axis, double angle_rad);

    /// Exponential of a rotation vector (axis * angle, rad).
    static UnitQuaternion from_rotation_vector(const Vec3& rotvec);

    /// 3-2-1 Euler sequence (yaw about z, then pitch about y, then roll about x),
    /// angles in radians: A = Rx(roll) * Ry(pitch) * Rz(yaw).
    static UnitQuaternion from_euler_321(double roll, double pitch, double yaw);

    /// Shepperd extraction from an orthonormal matrix.
    static UnitQuaternion from_rotation_matrix(const Mat3& m);

    double x() const { return q_(0); }
    double y() const { return q_(1); }
    double z() const { return q_(2); }
    double w() const { return q_(3); }

    Vec3 vec() const { return q_.head<3>(); }
    const Vec4& coeffs() const { return q_; }

    UnitQuaternion conjugate() const;

    /// Rotation vector (axis * angle) with angle in [0, pi].
    Vec3 to_rotation_vector() const;

    /// Direction cosine matrix of this attitude; throws InvalidInputError if the
    /// stored norm has been corrupted past 1e-6 (NaN propagation and the like).
    RotationMatrix to_rotation_matrix() const;

    /// Coordinate transform v_B = A(q_B_A) * v_A without forming the matrix.
    Vec3 transform(const Vec3& v) const;

private:
    struct Unchecked {};
    UnitQuaternion(const Vec4& xyzw, Unchecked) : q_(xyzw) {}

    Vec4 q_;

    friend UnitQuaternion compose(const UnitQuaternion&, const UnitQuaternion&);
};

/// Quaternion product with A(compose(q1, q2)) = A(q1) * A(q2).
UnitQuaternion compose(const UnitQuaternion& q1, const UnitQuaternion& q2);

/// Rotation angle, in degrees, of the relative rotation A(q_est) * A(q_true)^T.
/// Symmetric, in [0, 180], zero iff q_est == +-q_true.
double attitude_error_deg(const UnitQuaternion& q_est, const UnitQuaternion& q_true);

/**
 * 3x3 direction cosine matrix. Orthonormal with det +1 by construction;
 * the checked factory enforces both to 1e-10.
 */
class RotationMatrix {
public:
    /// Identity rotation.
    RotationMatrix() : m_(Mat3::Identity()) {}

    /// Validates M * M^T = I and det(M) = +1 within 1e-10.
    static RotationMatrix from_matrix(const Mat3& m);

    const Mat3& matrix() const { return m_; }

    RotationMatrix transpose() const { return RotationMatrix(m_.transpose(), Unchecked{}); }

    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    RotationMatrix operator*(const RotationMatrix& rhs) const {
        return RotationMatrix(m_ * rhs.m_, Unchecked{});
    }

    /// Rotation angle of M * M_ref^T, degrees.
    double angle_to_deg(const RotationMatrix& reference) const;

private:
    struct Unchecked {};
    RotationMatrix(const Mat3& m, Unchecked) : m_(m) {}

    Mat3 m_;

    friend class UnitQuaternion;
};

}  // namespace attinit
