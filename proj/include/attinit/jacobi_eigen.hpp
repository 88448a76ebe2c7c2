#pragma once

#include <cmath>

#include "attinit/errors.hpp"
#include "attinit/types.hpp"

namespace attinit {

template <int N>
struct SymmetricEigen {
    Eigen::Matrix<double, N, 1> eigenvalues;   // ascending
    Eigen::Matrix<double, N, N> eigenvectors;  // orthonormal columns, matching order
};

/**
 * Cyclic Jacobi diagonalization of a small dense symmetric matrix.
 * Sweeps Givens rotations over all off-diagonal pairs until the off-diagonal
 * Frobenius norm drops below 1e-13 * ||K||_F. Input must be symmetric within
 * 1e-9 relative to its norm (it is symmetrized before iterating).
 */
template <int N>
SymmetricEigen<N> jacobi_eigen(Eigen::Matrix<double, N, N> a) {
    static_assert(N >= 2);
    using MatN = Eigen::Matrix<double, N, N>;

    const double scale = std::max(a.norm(), 1e-300);
    if ((a - a.transpose()).norm() > 1e-9 * std::max(1.0, scale)) {
        throw InvalidInputError("jacobi_eigen requires a symmetric matrix");
    }
    a = 0.5 * (a + MatN(a.transpose()));

    MatN v = MatN::Identity();
    const double tol = 1e-13 * scale;

    auto off_norm = [&a]() {
        double s = 0.0;
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                s += 2.0 * a(p, q) * a(p, q);
            }
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol / (N * N)) {
                    continue;
                }
                // Stable rotation choice (Rutishauser).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < N; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < N; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen<N> out;
    // Insertion sort into ascending order, carrying the eigenvector columns.
    Eigen::Matrix<double, N, 1> d = a.diagonal();
    for (int i = 0; i < N; ++i) {
        int m = i;
        for (int j = i + 1; j < N; ++j) {
            if (d(j) < d(m)) {
                m = j;
            }
        }
        if (m != i) {
            std::swap(d(i), d(m));
            v.col(i).swap(v.col(m));
        }
    }
    out.eigenvalues = d;
    out.eigenvectors = v;
    return out;
}

/// 4x4 case used by the constant-attitude solve.
inline SymmetricEigen<4> eigh4(const Mat4& k) { return jacobi_eigen<4>(k); }

}  // namespace attinit
