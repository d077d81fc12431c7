#include "polewarp/star_shaped.hpp"

#include <cmath>
#include <sstream>

#include "polewarp/errors.hpp"
#include "polewarp/shapes.hpp"

namespace polewarp {

namespace {

/// Ray frame: the dominant axis kz, the two others kx, ky, and the shear.
struct RayFrame {
    int kx = 0, ky = 1, kz = 2;
    double sx = 0.0, sy = 0.0, sz = 1.0;
};

double axis(const Vec3& v, int k) { return k == 0 ? v.x : (k == 1 ? v.y : v.z); }

RayFrame make_frame(const Vec3& d) {
    RayFrame f;
    const double ax = std::abs(d.x), ay = std::abs(d.y), az = std::abs(d.z);
    f.kz = (ax > ay) ? (ax > az ? 0 : 2) : (ay > az ? 1 : 2);
    f.kx = (f.kz + 1) % 3;
    f.ky = (f.kx + 1) % 3;
    if (axis(d, f.kz) < 0.0) {
        std::swap(f.kx, f.ky);
    }
    f.sx = axis(d, f.kx) / axis(d, f.kz);
    f.sy = axis(d, f.ky) / axis(d, f.kz);
    f.sz = 1.0 / axis(d, f.kz);
    return f;
}

struct Projected {
    double x, y, z;
};

Projected project(const Vec3& p, const RayFrame& f) {
    const double pz = axis(p, f.kz);
    return {axis(p, f.kx) - f.sx * pz, axis(p, f.ky) - f.sy * pz, f.sz * pz};
}

/// Ownership of a zero edge function for the directed 2D edge (from -> to).
bool owns_edge(const Projected& from, const Projected& to) {
    const double ex = to.x - from.x;
    const double ey = to.y - from.y;
    return ey > 0.0 || (ey == 0.0 && ex < 0.0);
}

bool hits_triangle(const Projected& a, const Projected& b, const Projected& c) {
    // Edge functions: u for edge b->c, v for c->a, w for a->b.
    const double u = c.x * b.y - c.y * b.x;
    const double v = a.x * c.y - a.y * c.x;
    const double w = b.x * a.y - b.y * a.x;
    if ((u < 0.0 || v < 0.0 || w < 0.0) && (u > 0.0 || v > 0.0 || w > 0.0)) {
        return false;
    }
    const double det = u + v + w;
    if (det == 0.0) {
        return false;
    }
    // Flip edges of clockwise triangles so ownership is winding-independent.
    const bool ccw = det > 0.0;
    auto owned = [ccw](const Projected& p, const Projected& q) {
        return ccw ? owns_edge(p, q) : owns_edge(q, p);
    };
    if (u == 0.0 && !owned(b, c)) return false;
    if (v == 0.0 && !owned(c, a)) return false;
    if (w == 0.0 && !owned(a, b)) return false;

    const double t = u * a.z + v * b.z + w * c.z;
    return ccw ? t > 0.0 : t < 0.0;
}

}  // namespace

int ray_surface_hits(const TriMesh& mesh, const Vec3& direction) {
    const RayFrame f = make_frame(direction);
    int hits = 0;
    for (const auto& tri : mesh.triangles()) {
        const Projected a = project(mesh.vertex(tri[0]), f);
        const Projected b = project(mesh.vertex(tri[1]), f);
        const Projected c = project(mesh.vertex(tri[2]), f);
        if (hits_triangle(a, b, c)) {
            ++hits;
        }
    }
    return hits;
}

StarReport validate_star_shaped(const TriMesh& mesh, std::size_t n_samples) {
    const auto open = boundary_edges(mesh);
    if (!open.empty()) {
        std::ostringstream msg;
        msg << "mesh is not closed; " << open.size() << " boundary edge(s):";
        for (std::size_t i = 0; i < open.size() && i < 16; ++i) {
            msg << " (" << open[i].a << ',' << open[i].b << ')';
        }
        if (open.size() > 16) {
            msg << " ...";
        }
        throw StructuralError(msg.str());
    }

    StarReport report;
    auto probe = [&](const Vec3& dir) {
        ++report.samples_tested;
        const double n = norm(dir);
        if (!(n > 0.0)) {
            // A vertex or centroid at the origin: the center lies on the surface.
            report.offending_directions.push_back({dir, 0});
            return;
        }
        const Vec3 d = dir / n;
        const int hits = ray_surface_hits(mesh, d);
        if (hits != 1) {
            report.offending_directions.push_back({d, hits});
        }
    };

    for (const auto& v : mesh.vertices()) {
        probe(v);
    }
    for (const auto& t : mesh.triangles()) {
        probe((mesh.vertex(t[0]) + mesh.vertex(t[1]) + mesh.vertex(t[2])) / 3.0);
    }
    for (const auto& d : fibonacci_sphere(n_samples)) {
        probe(d);
    }
    report.is_star_shaped = report.offending_directions.empty();
    return report;
}

}  // namespace polewarp
