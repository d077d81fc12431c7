#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "polewarp/vec3.hpp"

namespace polewarp {

using Triangle = std::array<std::uint32_t, 3>;

/// Undirected edge with a < b.
struct Edge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Indexed triangle mesh. Immutable once constructed.
///
/// Construction enforces: finite positions, indices in range, no repeated
/// index within a triangle and no triangle of area <= 1e-12.
class TriMesh {
public:
    static constexpr double kMinTriangleArea = 1e-12;

    TriMesh() = default;
    TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles);

    const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_triangles() const noexcept { return triangles_.size(); }

    const Vec3& vertex(std::size_t i) const { return vertices_[i]; }
    const Triangle& triangle(std::size_t i) const { return triangles_[i]; }

    /// Returns a copy with every vertex moved by `offset`.
    TriMesh translated(const Vec3& offset) const;

private:
    std::vector<Vec3> vertices_;
    std::vector<Triangle> triangles_;
};

/// Sorted list of the distinct undirected edges. An edge id is an index into it.
std::vector<Edge> unique_edges(std::span<const Triangle> triangles);
inline std::vector<Edge> unique_edges(const TriMesh& mesh) { return unique_edges(mesh.triangles()); }

/// Edges not shared by exactly two triangles.
std::vector<Edge> boundary_edges(const TriMesh& mesh);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

/// Interior angles at the three corners (radians).
std::array<double, 3> interior_angles(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace polewarp
