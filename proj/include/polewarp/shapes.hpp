#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polewarp/mesh.hpp"

namespace polewarp {

/// n quasi-uniform unit directions on a golden-angle spiral, ordered from +z to -z.
std::vector<Vec3> fibonacci_sphere(std::size_t n);

/// Unit icosphere: the icosahedron after `subdivisions` 4:1 midpoint splits,
/// projected to the sphere. Outward-oriented; 10 * 4^s + 2 vertices.
TriMesh make_icosphere(int subdivisions);

/// Torus around the z axis with major radius R and tube radius r.
TriMesh make_torus(double major_radius, double minor_radius, int major_segments, int minor_segments);

/// Icosphere with every vertex pushed out radially by amplitude * U[0, 1).
TriMesh make_radial_noise_ball(int subdivisions, double amplitude, std::uint64_t seed);

/// Ids of the triangles whose centroid direction satisfies `keep`.
std::vector<std::uint32_t> select_triangles(const TriMesh& mesh,
                                            const std::function<bool(const Vec3&)>& keep);

/// Hair-like region: triangles whose centroid direction has z > min_z. For
/// min_z < 0 the region covers the +z pole and reaches past the equator.
std::vector<std::uint32_t> cap_band_triangles(const TriMesh& mesh, double min_z);

}  // namespace polewarp
