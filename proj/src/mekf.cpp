#include "attinit/mekf.hpp"

#include <cmath>

#include "attinit/errors.hpp"
#include "attinit/jacobi_eigen.hpp"

namespace attinit {

void MekfConfig::validate() const {
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        throw InvalidInputError("MekfConfig.dt_s must be finite and > 0");
    }
    if (sigma_v_rad < 0.0 || sigma_u_rad < 0.0 || r_scalar_rad2 < 0.0) {
        throw InvalidInputError("MekfConfig noise parameters must be non-negative");
    }
}

double MekfState::max_asymmetry() const {
    return (cov - Mat6(cov.transpose())).cwiseAbs().maxCoeff();
}

double MekfState::min_eigenvalue() const {
    return jacobi_eigen<6>(0.5 * (cov + Mat6(cov.transpose()))).eigenvalues(0);
}

MekfState mekf_propagate(const MekfState& s, const AngularRate& gyro, const MekfConfig& cfg) {
    cfg.validate();
    const double dt = cfg.dt_s;
    const Vec3 w = gyro.rad_s - s.bias_rad_s;

    MekfState next = s;
    next.q = propagate(s.q, AngularRate(w), dt);
    next.t_s = s.t_s + dt;

    Mat6 f = Mat6::Zero();
    f.topLeftCorner<3, 3>() = -skew(w);
    f.topRightCorner<3, 3>() = -Mat3::Identity();
    const Mat6 phi = Mat6::Identity() + f * dt + 0.5 * (f * f) * (dt * dt);

    const double sv2 = cfg.sigma_v_rad * cfg.sigma_v_rad;
    const double su2 = cfg.sigma_u_rad * cfg.sigma_u_rad;
    Mat6 qd = Mat6::Zero();
    qd.topLeftCorner<3, 3>() = (sv2 * dt + su2 * dt * dt * dt / 3.0) * Mat3::Identity();
    qd.topRightCorner<3, 3>() = -(0.5 * su2 * dt * dt) * Mat3::Identity();
    qd.bottomLeftCorner<3, 3>() = qd.topRightCorner<3, 3>();
    qd.bottomRightCorner<3, 3>() = (su2 * dt) * Mat3::Identity();

    next.cov = phi * s.cov * phi.transpose() + qd;
    next.cov = 0.5 * (next.cov + Mat6(next.cov.transpose()));
    return next;
}

MekfState mekf_update(const MekfState& s, const VectorObservationPair& obs,
                      const MekfConfig& cfg) {
    cfg.validate();
    const Vec3 predicted = s.q.transform(obs.reference);
    const Vec3 residual = obs.body - predicted;

    Eigen::Matrix<double, 3, 6> h = Eigen::Matrix<double, 3, 6>::Zero();
    h.leftCols<3>() = skew(predicted);

    const Mat3 innov = h * s.cov * h.transpose() + cfg.r_scalar_rad2 * Mat3::Identity();
    const SymmetricEigen<3> eig = jacobi_eigen<3>(0.5 * (innov + Mat3(innov.transpose())));
    if (!(eig.eigenvalues(0) > 0.0) ||
        eig.eigenvalues(2) / eig.eigenvalues(0) > 1e12) {
        throw SingularUpdateError("innovation covariance is numerically singular");
    }

    const Eigen::Matrix<double, 6, 3> gain = s.cov * h.transpose() * innov.inverse();
    const Vec6 dx = gain * residual;

    MekfState next = s;
    const Vec3 att_err = dx.head<3>();
    Vec4 dq;
    dq.head<3>() = 0.5 * att_err;
    dq(3) = 1.0;
    next.q = compose(UnitQuaternion::normalized_from(dq), s.q);
    next.bias_rad_s = s.bias_rad_s + dx.tail<3>();

    const Mat6 i_kh = Mat6::Identity() - gain * h;
    next.cov = i_kh * s.cov * i_kh.transpose() +
               gain * (cfg.r_scalar_rad2 * Mat3::Identity()) * gain.transpose();
    next.cov = 0.5 * (next.cov + Mat6(next.cov.transpose()));
    return next;
}

MekfState handoff_from_initializer(const UnitQuaternion& q_init, double att_std_deg,
                                   double bias_std_rad_s) {
    if (!(att_std_deg >= 0.0) || !(bias_std_rad_s >= 0.0) ||
        !std::isfinite(att_std_deg) || !std::isfinite(bias_std_rad_s)) {
        throw InvalidInputError("handoff standard deviations must be finite and >= 0");
    }
    MekfState s;
    s.q = q_init;
    s.bias_rad_s = Vec3::Zero();
    const double att_var = std::pow(att_std_deg * kRadPerDeg, 2);
    const double bias_var = bias_std_rad_s * bias_std_rad_s;
    s.cov = Mat6::Zero();
    s.cov.topLeftCorner<3, 3>() = att_var * Mat3::Identity();
    s.cov.bottomRightCorner<3, 3>() = bias_var * Mat3::Identity();
    return s;
}

}  // namespace attinit
