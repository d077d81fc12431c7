#include "polewarp/shapes.hpp"

#include <cmath>
#include <map>
#include <random>

#include "polewarp/constants.hpp"

namespace polewarp {

std::vector<Vec3> fibonacci_sphere(std::size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double a = golden * static_cast<double>(i);
        out.push_back({rho * std::cos(a), rho * std::sin(a), z});
    }
    return out;
}

TriMesh make_icosphere(int subdivisions) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                           {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                           {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    for (auto& p : v) {
        p = normalized(p);
    }
    std::vector<Triangle> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                               {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                               {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                               {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7}, {9, 8, 1}};
    for (int s = 0; s < subdivisions; ++s) {
        std::map<Edge, std::uint32_t> midpoint;
        auto mid = [&](std::uint32_t a, std::uint32_t b) {
            const Edge e{std::min(a, b), std::max(a, b)};
            auto it = midpoint.find(e);
            if (it != midpoint.end()) {
                return it->second;
            }
            v.push_back(normalized(v[a] + v[b]));
            const auto id = static_cast<std::uint32_t>(v.size() - 1);
            midpoint.emplace(e, id);
            return id;
        };
        std::vector<Triangle> next;
        next.reserve(f.size() * 4);
        for (const auto& tri : f) {
            const auto ab = mid(tri[0], tri[1]);
            const auto bc = mid(tri[1], tri[2]);
            const auto ca = mid(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        f = std::move(next);
    }
    return TriMesh(std::move(v), std::move(f));
}

TriMesh make_torus(double major_radius, double minor_radius, int major_segments, int minor_segments) {
    std::vector<Vec3> v;
    std::vector<Triangle> f;
    const auto nu = static_cast<std::uint32_t>(major_segments);
    const auto nv = static_cast<std::uint32_t>(minor_segments);
    for (std::uint32_t i = 0; i < nu; ++i) {
        const double u = kTwoPi * i / nu;
        for (std::uint32_t j = 0; j < nv; ++j) {
            const double w = kTwoPi * j / nv;
            const double ring = major_radius + minor_radius * std::cos(w);
            v.push_back({ring * std::cos(u), ring * std::sin(u), minor_radius * std::sin(w)});
        }
    }
    for (std::uint32_t i = 0; i < nu; ++i) {
        for (std::uint32_t j = 0; j < nv; ++j) {
            const std::uint32_t a = i * nv + j;
            const std::uint32_t b = ((i + 1) % nu) * nv + j;
            const std::uint32_t c = ((i + 1) % nu) * nv + (j + 1) % nv;
            const std::uint32_t d = i * nv + (j + 1) % nv;
            f.push_back({a, b, c});
            f.push_back({a, c, d});
        }
    }
    return TriMesh(std::move(v), std::move(f));
}

TriMesh make_radial_noise_ball(int subdivisions, double amplitude, std::uint64_t seed) {
    const TriMesh base = make_icosphere(subdivisions);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vec3> v = base.vertices();
    for (auto& p : v) {
        p *= 1.0 + amplitude * unit(rng);
    }
    return TriMesh(std::move(v), base.triangles());
}

std::vector<std::uint32_t> select_triangles(const TriMesh& mesh,
                                            const std::function<bool(const Vec3&)>& keep) {
    std::vector<std::uint32_t> ids;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const Vec3 c = mesh.vertex(tri[0]) + mesh.vertex(tri[1]) + mesh.vertex(tri[2]);
        if (keep(normalized(c))) {
            ids.push_back(static_cast<std::uint32_t>(t));
        }
    }
    return ids;
}

std::vector<std::uint32_t> cap_band_triangles(const TriMesh& mesh, double min_z) {
    return select_triangles(mesh, [min_z](const Vec3& d) { return d.z > min_z; });
}

}  // namespace polewarp
