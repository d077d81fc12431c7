#pragma once

#include <cstddef>
#include <vector>

#include "polewarp/mesh.hpp"

namespace polewarp {

/// Number of triangles crossed by the ray {t d : t > 0} from the origin.
///
/// Uses the watertight ray/triangle test in the ray's sheared frame. Hits
/// exactly on a shared edge or vertex are given to one incident triangle by
/// a top-left ownership rule on the projected edge, so a ray through a
/// manifold edge or vertex of a surface it crosses counts once.
int ray_surface_hits(const TriMesh& mesh, const Vec3& direction);

struct RayHitDirection {
    Vec3 direction;
    int hit_count = 0;
};

/// Evidence for star-shapedness with respect to the origin.
struct StarReport {
    bool is_star_shaped = false;
    std::vector<RayHitDirection> offending_directions;
    std::size_t samples_tested = 0;
};

/// Casts rays toward every vertex, every triangle centroid and `n_samples`
/// Fibonacci-sphere directions; the mesh passes iff every ray crosses the
/// surface exactly once. Sampling makes this a necessary condition only.
///
/// Throws StructuralError naming the boundary edges when the mesh is not
/// closed (some edge not shared by exactly two triangles).
StarReport validate_star_shaped(const TriMesh& mesh, std::size_t n_samples);

}  // namespace polewarp
