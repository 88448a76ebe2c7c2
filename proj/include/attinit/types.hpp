#pragma once

#include <Eigen/Dense>

namespace attinit {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegPerRad = 180.0 / kPi;
constexpr double kRadPerDeg = kPi / 180.0;

/// rad/s for a rate given in deg/h.
constexpr double deg_per_hour_to_rad_per_s(double deg_per_hour) {
    return deg_per_hour * kRadPerDeg / 3600.0;
}

/// Cross-product matrix: skew(a) * b == a x b.
inline Mat3 skew(const Vec3& a) {
    Mat3 s;
    s << 0.0, -a.z(), a.y(),
         a.z(), 0.0, -a.x(),
        -a.y(), a.x(), 0.0;
    return s;
}

}  // namespace attinit
