#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "polewarp/vec3.hpp"

namespace polewarp::testing {

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        const double n = norm(v);
        if (n > 1e-8) {
            return v / n;
        }
    }
}

inline std::vector<Vec3> random_unit_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(random_unit(rng));
    }
    return pts;
}

/// Unit tangent at p orthogonal to p, uniformly oriented.
inline Vec3 random_tangent(const Vec3& p, std::mt19937_64& rng) {
    for (;;) {
        const Vec3 v = random_unit(rng);
        const Vec3 t = v - dot(v, p) * p;
        const double n = norm(t);
        if (n > 1e-6) {
            return t / n;
        }
    }
}

/// RMS distance of 3D points from the best-fit circle: least-squares plane
/// through the centroid (smallest covariance eigenvector), then an algebraic
/// (Kasa) circle fit in that plane, then the RMS of the in-plane radial
/// residuals combined with the out-of-plane distances.
inline double circle_fit_rms(const std::vector<Vec3>& pts) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd P(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
        P(i, 0) = pts[i].x;
        P(i, 1) = pts[i].y;
        P(i, 2) = pts[i].z;
    }
    const Eigen::RowVector3d centroid = P.colwise().mean();
    const Eigen::MatrixXd Q = P.rowwise() - centroid;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Q.transpose() * Q);
    const Eigen::Vector3d normal = es.eigenvectors().col(0);
    const Eigen::Vector3d e1 = es.eigenvectors().col(2);
    const Eigen::Vector3d e2 = normal.cross(e1);

    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd b(n);
    Eigen::VectorXd off(n), u(n), v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Vector3d q = Q.row(i).transpose();
        u(i) = q.dot(e1);
        v(i) = q.dot(e2);
        off(i) = q.dot(normal);
        A(i, 0) = u(i);
        A(i, 1) = v(i);
        A(i, 2) = 1.0;
        b(i) = -(u(i) * u(i) + v(i) * v(i));
    }
    const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
    const double cu = -0.5 * sol(0), cv = -0.5 * sol(1);
    const double radius = std::sqrt(cu * cu + cv * cv - sol(2));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double radial = std::hypot(u(i) - cu, v(i) - cv) - radius;
        acc += radial * radial + off(i) * off(i);
    }
    return std::sqrt(acc / static_cast<double>(n));
}

}  // namespace polewarp::testing
