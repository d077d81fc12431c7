#include "polewarp/mesh.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "polewarp/errors.hpp"

namespace polewarp {

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_finite(vertices_[i])) {
            throw StructuralError("vertex " + std::to_string(i) + " is not finite");
        }
    }
    const auto n = vertices_.size();
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const Triangle& tri = triangles_[t];
        for (auto idx : tri) {
            if (idx >= n) {
                throw StructuralError("triangle " + std::to_string(t) + " references vertex " +
                                      std::to_string(idx) + " of " + std::to_string(n));
            }
        }
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
            throw StructuralError("triangle " + std::to_string(t) + " repeats a vertex index");
        }
        if (triangle_area(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]) <= kMinTriangleArea) {
            throw StructuralError("triangle " + std::to_string(t) + " has zero area");
        }
    }
}

TriMesh TriMesh::translated(const Vec3& offset) const {
    std::vector<Vec3> moved = vertices_;
    for (auto& v : moved) {
        v += offset;
    }
    return TriMesh(std::move(moved), triangles_);
}

std::vector<Edge> unique_edges(std::span<const Triangle> triangles) {
    std::vector<Edge> edges;
    edges.reserve(triangles.size() * 3);
    for (const auto& t : triangles) {
        for (int k = 0; k < 3; ++k) {
            const auto u = t[k];
            const auto v = t[(k + 1) % 3];
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<Edge> boundary_edges(const TriMesh& mesh) {
    std::map<Edge, int> counts;
    for (const auto& t : mesh.triangles()) {
        for (int k = 0; k < 3; ++k) {
            const auto u = t[k];
            const auto v = t[(k + 1) % 3];
            ++counts[{std::min(u, v), std::max(u, v)}];
        }
    }
    std::vector<Edge> out;
    for (const auto& [e, c] : counts) {
        if (c != 2) {
            out.push_back(e);
        }
    }
    return out;
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
    return 0.5 * norm(cross(b - a, c - a));
}

std::array<double, 3> interior_angles(const Vec3& a, const Vec3& b, const Vec3& c) {
    return {angle_between(b - a, c - a), angle_between(c - b, a - b), angle_between(a - c, b - c)};
}

}  // namespace polewarp
