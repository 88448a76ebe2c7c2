#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "attinit/types.hpp"

namespace attinit {

/**
 * Seeded random stream with fully specified output: draws come from
 * std::mt19937_64 through fixed bit-to-double and Box-Muller transforms, so a
 * given seed produces the same sequence on every standard library.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal (Box-Muller; pairs are generated, one is cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    Vec3 gaussian_vec3(double stddev) {
        return Vec3(stddev * gaussian(), stddev * gaussian(), stddev * gaussian());
    }

    /// Uniform direction on the unit sphere.
    Vec3 unit_vector() {
        while (true) {
            const Vec3 g(gaussian(), gaussian(), gaussian());
            const double n = g.norm();
            if (n > 1e-8) {
                return g / n;
            }
        }
    }

    /// Uniform random attitude.
    Vec4 unit_quaternion_coeffs() {
        while (true) {
            const Vec4 g(gaussian(), gaussian(), gaussian(), gaussian());
            const double n = g.norm();
            if (n > 1e-8) {
                return g / n;
            }
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace attinit
