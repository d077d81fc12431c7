#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "polewarp/mesh.hpp"
#include "polewarp/pole_warp.hpp"
#include "polewarp/rotation.hpp"
#include "polewarp/spherical.hpp"

namespace polewarp {

/// Placement of the chart: p -> warp(rotate(p - translation)), then spherical.
struct WarpFrame {
    Vec3 translation{};
    Rotation rotation{};
    WarpSigma sigma{1.0};

    static WarpFrame identity() { return {}; }
};

/// Sorted, duplicate-free set of triangle ids.
class RoiMask {
public:
    RoiMask() = default;
    /// Sorts and deduplicates. Throws StructuralError for ids >= num_triangles.
    RoiMask(std::vector<std::uint32_t> ids, std::size_t num_triangles);

    static RoiMask all(std::size_t num_triangles);

    const std::vector<std::uint32_t>& ids() const noexcept { return ids_; }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t size() const noexcept { return ids_.size(); }
    bool contains(std::uint32_t id) const;

private:
    std::vector<std::uint32_t> ids_;
};

/// Per-triangle interior-angle distortion between the mesh and its chart.
struct DistortionStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;                        ///< over triangles with finite distortion
    std::vector<std::uint32_t> triangles;     ///< ids measured
    std::vector<double> per_triangle;         ///< aligned with `triangles`
    std::vector<std::uint32_t> degenerate;    ///< ids whose chart image has zero area
};

struct ChartDiagnostics {
    std::vector<std::uint32_t> seam_crossings;  ///< edge ids (see unique_edges)
    std::vector<std::uint32_t> singular_faces;  ///< triangle ids
    DistortionStats distortion;
};

/// Flattened mesh: spherical coordinates of the warped directions, with the
/// original radius |v - translation| carried in r.
struct ParamChart {
    std::vector<SphericalCoord> coords;
    std::vector<Triangle> triangles;
    ChartDiagnostics diagnostics;
    std::vector<std::string> warnings;

    bool cohesive() const {
        return diagnostics.seam_crossings.empty() && diagnostics.singular_faces.empty();
    }
};

/// Unit direction of `v - translation` after the rotation, before warping.
/// Throws DegenerateVertexError when v coincides with the translation.
Vec3 frame_direction(const Vec3& v, const WarpFrame& frame, std::size_t vertex_id = 0);
std::vector<Vec3> frame_directions(const TriMesh& mesh, const WarpFrame& frame);

/// Unit direction of `v` in the post-warp frame. Directions within the
/// warp's singular guard of +y snap to (0, 1, 0).
/// Throws DegenerateVertexError when v coincides with the frame's translation
/// and SingularityError when the warp rejects the direction.
Vec3 warped_direction(const Vec3& v, const WarpFrame& frame, std::size_t vertex_id = 0);

/// Warped directions of every mesh vertex.
std::vector<Vec3> warped_directions(const TriMesh& mesh, const WarpFrame& frame);

/// Chart of the whole mesh; diagnostics cover every triangle.
ParamChart forward_chart(const TriMesh& mesh, const WarpFrame& frame);

/// Chart of the whole mesh; diagnostics restricted to the ROI.
ParamChart forward_chart(const TriMesh& mesh, const WarpFrame& frame, const RoiMask& roi);

struct Reconstruction {
    TriMesh mesh;
    /// Vertices charted exactly on a pole (theta 0 or pi), where phi carries no information.
    std::vector<std::uint32_t> pole_ambiguous;
};

/// spherical -> Cartesian, unwarp (warp with 1/sigma), inverse rotation, scale by r, translate back.
Reconstruction inverse_chart(const ParamChart& chart, const WarpFrame& frame);

/// Does the chord a-b cross the branch-cut half-plane {y = 0, x < 0}?
/// Points with y == 0 count on the y > 0 side, matching the phi = +pi branch.
bool crosses_branch_cut(const Vec3& a, const Vec3& b);

/// The azimuth-jump heuristic: |phi_a - phi_b| > pi.
bool wraps_azimuth(double phi_a, double phi_b);

/// Is `pole` inside (or on the boundary of) the spherical triangle a, b, c?
bool spherical_triangle_contains(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& pole);

/// ROI edges whose warped endpoints straddle the branch cut. Returns edge ids.
std::vector<std::uint32_t> detect_seam_crossings(const TriMesh& mesh, const WarpFrame& frame,
                                                 const RoiMask& roi);
std::vector<std::uint32_t> detect_seam_crossings(std::span<const Triangle> triangles,
                                                 std::span<const Vec3> warped_dirs,
                                                 const RoiMask& roi);

/// ROI triangles whose warped spherical triangle contains (0, 0, +-1).
///
/// Also flags a triangle whose unwarped directions (`frame_dirs`) contain a
/// pole preimage: near the warp's expansion point a face can swell past a
/// hemisphere while its three warped vertices stay close together.
std::vector<std::uint32_t> detect_singular_faces(const TriMesh& mesh, const WarpFrame& frame,
                                                 const RoiMask& roi);
std::vector<std::uint32_t> detect_singular_faces(std::span<const Triangle> triangles,
                                                 std::span<const Vec3> frame_dirs,
                                                 std::span<const Vec3> warped_dirs, WarpSigma sigma,
                                                 const RoiMask& roi);

/// Largest absolute interior-angle difference between a 3D triangle and its
/// (phi, theta) image. Infinite when the image has zero area.
double triangle_angle_distortion(const Vec3& a, const Vec3& b, const Vec3& c, const ThetaPhi& ta,
                                 const ThetaPhi& tb, const ThetaPhi& tc);

DistortionStats triangle_distortion(const TriMesh& mesh, const ParamChart& chart);
DistortionStats triangle_distortion(const TriMesh& mesh, const ParamChart& chart, const RoiMask& roi);

}  // namespace polewarp
