#include <doctest.h>

#include "attinit/errors.hpp"
#include "attinit/quaternion.hpp"
#include "attinit/rng.hpp"
#include "common/oracles.hpp"

using namespace attinit;

TEST_CASE("identity quaternion maps to the identity rotation matrix") {
    const UnitQuaternion q;
    CHECK(q.w() == 1.0);
    const Mat3 m = q.to_rotation_matrix().matrix();
    CHECK((m - Mat3::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("construction rejects norms off by more than 1e-6 and non-finite input") {
    CHECK_THROWS_AS(UnitQuaternion(0.0, 0.0, 0.0, 1.01), InvalidInputError);
    CHECK_THROWS_AS(UnitQuaternion(1.0, 1.0, 1.0, 1.0), InvalidInputError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(UnitQuaternion(nan, 0.0, 0.0, 1.0), InvalidInputError);
    CHECK_THROWS_AS(UnitQuaternion::normalized_from(Vec4::Zero()), InvalidInputError);
    // slightly off but within 1e-6 gets renormalized to 1e-12
    const UnitQuaternion q(0.0, 0.0, 0.0, 1.0 + 5e-7);
    CHECK(std::abs(q.coeffs().norm() - 1.0) < 1e-12);
}

TEST_CASE("90 degree frame rotation about z maps x to -y") {
    const UnitQuaternion q(0.0, 0.0, std::sin(kPi / 4.0), std::cos(kPi / 4.0));
    const Vec3 b = q.to_rotation_matrix() * Vec3(1.0, 0.0, 0.0);
    CHECK(b.x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(b.y() == doctest::Approx(-1.0));
    CHECK(b.z() == doctest::Approx(0.0).epsilon(1e-15));
    // transform() agrees with the matrix action
    const Vec3 b2 = q.transform(Vec3(1.0, 0.0, 0.0));
    CHECK((b - b2).norm() < 1e-15);
}

TEST_CASE("rotation matrices of random quaternions are orthonormal with det +1") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const UnitQuaternion q = oracles::random_unit_quaternion(rng);
        const Mat3 m = q.to_rotation_matrix().matrix();
        CHECK((m * m.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(std::abs(m.determinant() - 1.0) < 1e-10);
    }
}

TEST_CASE("compose is consistent with the matrix product") {
    SUBCASE("identity is neutral") {
        Rng rng(12);
        const UnitQuaternion q = oracles::random_unit_quaternion(rng);
        const UnitQuaternion r = compose(UnitQuaternion(), q);
        CHECK(std::abs(r.coeffs().dot(q.coeffs())) == doctest::Approx(1.0));
    }
    SUBCASE("conjugate inverts") {
        Rng rng(13);
        const UnitQuaternion q = oracles::random_unit_quaternion(rng);
        const UnitQuaternion r = compose(q, q.conjugate());
        CHECK(attitude_error_deg(r, UnitQuaternion()) < 1e-12);
    }
    SUBCASE("A(q1 q2) = A(q1) A(q2) over 1000 random pairs") {
        Rng rng(14);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const UnitQuaternion q1 = oracles::random_unit_quaternion(rng);
            const UnitQuaternion q2 = oracles::random_unit_quaternion(rng);
            const Mat3 lhs = compose(q1, q2).to_rotation_matrix().matrix();
            const Mat3 rhs =
                q1.to_rotation_matrix().matrix() * q2.to_rotation_matrix().matrix();
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("attitude_error_deg") {
    Rng rng(15);
    SUBCASE("zero for identical attitudes") {
        const UnitQuaternion q = oracles::random_unit_quaternion(rng);
        CHECK(attitude_error_deg(q, q) == 0.0);
    }
    SUBCASE("10 degree rotation about x reads 10") {
        const UnitQuaternion q = UnitQuaternion::from_axis_angle(Vec3::UnitX(), 10.0 * kRadPerDeg);
        CHECK(attitude_error_deg(q, UnitQuaternion()) == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("euler [10,10,30] error matches the DCM trace oracle") {
        const UnitQuaternion q = UnitQuaternion::from_euler_321(
            10.0 * kRadPerDeg, 10.0 * kRadPerDeg, 30.0 * kRadPerDeg);
        const double got = attitude_error_deg(q, UnitQuaternion());
        // frozen from the composed-DCM oracle
        CHECK(got == doctest::Approx(32.292678349939713).epsilon(1e-12));
        const Mat3 m = oracles::dcm_from_euler321(10.0 * kRadPerDeg, 10.0 * kRadPerDeg,
                                                  30.0 * kRadPerDeg);
        CHECK(got == doctest::Approx(oracles::dcm_angle_deg(m)).epsilon(1e-11));
        // and the quaternion DCM agrees with the oracle DCM
        CHECK((q.to_rotation_matrix().matrix() - m).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("symmetric, respects the double cover, bounded by 180") {
        for (int i = 0; i < 100; ++i) {
            const UnitQuaternion a = oracles::random_unit_quaternion(rng);
            const UnitQuaternion b = oracles::random_unit_quaternion(rng);
            const double ab = attitude_error_deg(a, b);
            CHECK(ab == doctest::Approx(attitude_error_deg(b, a)).epsilon(1e-12));
            CHECK(ab >= 0.0);
            CHECK(ab <= 180.0);
            const UnitQuaternion neg_a = UnitQuaternion::normalized_from(-a.coeffs());
            CHECK(attitude_error_deg(a, neg_a) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("from_rotation_matrix round-trips random attitudes") {
    Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        const UnitQuaternion q = oracles::random_unit_quaternion(rng);
        const UnitQuaternion back =
            UnitQuaternion::from_rotation_matrix(q.to_rotation_matrix().matrix());
        CHECK(attitude_error_deg(back, q) < 1e-10);
    }
}

TEST_CASE("RotationMatrix factory validates orthonormality and determinant") {
    Mat3 bad = Mat3::Identity();
    bad(0, 0) = 1.001;
    CHECK_THROWS_AS(RotationMatrix::from_matrix(bad), InvalidInputError);
    Mat3 reflect = Mat3::Identity();
    reflect(2, 2) = -1.0;
    CHECK_THROWS_AS(RotationMatrix::from_matrix(reflect), InvalidInputError);
    CHECK_NOTHROW(RotationMatrix::from_matrix(Mat3::Identity()));
}
