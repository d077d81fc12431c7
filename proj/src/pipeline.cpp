#include "polewarp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"

namespace polewarp {

RoiMask::RoiMask(std::vector<std::uint32_t> ids, std::size_t num_triangles) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.back() >= num_triangles) {
        throw StructuralError("ROI references triangle " + std::to_string(ids_.back()) + " of " +
                              std::to_string(num_triangles));
    }
}

RoiMask RoiMask::all(std::size_t num_triangles) {
    std::vector<std::uint32_t> ids(num_triangles);
    std::iota(ids.begin(), ids.end(), 0u);
    return RoiMask(std::move(ids), num_triangles);
}

bool RoiMask::contains(std::uint32_t id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

Vec3 frame_direction(const Vec3& v, const WarpFrame& frame, std::size_t vertex_id) {
    const Vec3 d = v - frame.translation;
    const double r = norm(d);
    if (!(r > 0.0)) {
        throw DegenerateVertexError(vertex_id, "vertex " + std::to_string(vertex_id) +
                                                   " coincides with the star center");
    }
    return rotate(d / r, frame.rotation);
}

std::vector<Vec3> frame_directions(const TriMesh& mesh, const WarpFrame& frame) {
    std::vector<Vec3> out;
    out.reserve(mesh.num_vertices());
    for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
        out.push_back(frame_direction(mesh.vertex(i), frame, i));
    }
    return out;
}

Vec3 warped_direction(const Vec3& v, const WarpFrame& frame, std::size_t vertex_id) {
    const Vec3 u = frame_direction(v, frame, vertex_id);
    try {
        return warp_poles(u, frame.sigma);
    } catch (const DomainError&) {
        throw SingularityError(vertex_id, "vertex " + std::to_string(vertex_id) +
                                              " lies on the singular ray of the pole warp");
    }
}

std::vector<Vec3> warped_directions(const TriMesh& mesh, const WarpFrame& frame) {
    std::vector<Vec3> out;
    out.reserve(mesh.num_vertices());
    for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
        out.push_back(warped_direction(mesh.vertex(i), frame, i));
    }
    return out;
}

namespace {

ParamChart chart_from_directions(const TriMesh& mesh, const WarpFrame& frame,
                                 const std::vector<Vec3>& dirs) {
    ParamChart chart;
    chart.triangles = mesh.triangles();
    chart.coords.reserve(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        SphericalCoord s = cartesian_to_spherical(dirs[i]);
        s.r = norm(mesh.vertex(i) - frame.translation);
        chart.coords.push_back(s);
    }
    if (!frame.sigma.in_validated_range()) {
        chart.warnings.push_back("sigma outside [1e-3, 1e3]; chart precision is not guaranteed");
    }
    return chart;
}

}  // namespace

ParamChart forward_chart(const TriMesh& mesh, const WarpFrame& frame) {
    return forward_chart(mesh, frame, RoiMask::all(mesh.num_triangles()));
}

ParamChart forward_chart(const TriMesh& mesh, const WarpFrame& frame, const RoiMask& roi) {
    const std::vector<Vec3> dirs = warped_directions(mesh, frame);
    ParamChart chart = chart_from_directions(mesh, frame, dirs);
    chart.diagnostics.seam_crossings = detect_seam_crossings(mesh.triangles(), dirs, roi);
    chart.diagnostics.singular_faces =
        detect_singular_faces(mesh.triangles(), frame_directions(mesh, frame), dirs, frame.sigma, roi);
    chart.diagnostics.distortion = triangle_distortion(mesh, chart, roi);
    if (!chart.diagnostics.distortion.degenerate.empty()) {
        chart.warnings.push_back(std::to_string(chart.diagnostics.distortion.degenerate.size()) +
                                 " triangle(s) collapse to zero area in the chart");
    }
    return chart;
}

Reconstruction inverse_chart(const ParamChart& chart, const WarpFrame& frame) {
    std::vector<Vec3> verts;
    std::vector<std::uint32_t> ambiguous;
    verts.reserve(chart.coords.size());
    for (std::size_t i = 0; i < chart.coords.size(); ++i) {
        const SphericalCoord& s = chart.coords[i];
        if (s.theta == 0.0 || s.theta == kPi) {
            ambiguous.push_back(static_cast<std::uint32_t>(i));
        }
        const Vec3 w = spherical_to_cartesian({s.theta, s.phi, 1.0});
        const Vec3 u = unwarp_poles(w, frame.sigma);
        verts.push_back(frame.translation + s.r * rotate_inverse(u, frame.rotation));
    }
    return {TriMesh(std::move(verts), chart.triangles), std::move(ambiguous)};
}

bool crosses_branch_cut(const Vec3& a, const Vec3& b) {
    const bool a_up = a.y >= 0.0;
    const bool b_up = b.y >= 0.0;
    if (a_up == b_up) {
        return false;
    }
    const double t = (0.0 - a.y) / (b.y - a.y);
    const double x = a.x + (b.x - a.x) * t;
    return x < 0.0;
}

bool wraps_azimuth(double phi_a, double phi_b) { return std::abs(phi_a - phi_b) > kPi; }

bool spherical_triangle_contains(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& pole) {
    const double orient = triple(a, b, c);
    if (orient == 0.0) {
        return false;
    }
    const double s = orient > 0.0 ? 1.0 : -1.0;
    return s * triple(a, b, pole) >= 0.0 && s * triple(b, c, pole) >= 0.0 &&
           s * triple(c, a, pole) >= 0.0;
}

std::vector<std::uint32_t> detect_seam_crossings(const TriMesh& mesh, const WarpFrame& frame,
                                                 const RoiMask& roi) {
    return detect_seam_crossings(mesh.triangles(), warped_directions(mesh, frame), roi);
}

std::vector<std::uint32_t> detect_seam_crossings(std::span<const Triangle> triangles,
                                                 std::span<const Vec3> warped_dirs,
                                                 const RoiMask& roi) {
    const std::vector<Edge> edges = unique_edges(triangles);
    std::vector<char> flagged(edges.size(), 0);
    for (auto t : roi.ids()) {
        const Triangle& tri = triangles[t];
        for (int k = 0; k < 3; ++k) {
            const auto u = tri[k];
            const auto v = tri[(k + 1) % 3];
            const Edge e{std::min(u, v), std::max(u, v)};
            const auto id = static_cast<std::size_t>(
                std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
            if (!flagged[id] && crosses_branch_cut(warped_dirs[e.a], warped_dirs[e.b])) {
                flagged[id] = 1;
            }
        }
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < flagged.size(); ++i) {
        if (flagged[i]) {
            out.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return out;
}

std::vector<std::uint32_t> detect_singular_faces(const TriMesh& mesh, const WarpFrame& frame,
                                                 const RoiMask& roi) {
    return detect_singular_faces(mesh.triangles(), frame_directions(mesh, frame),
                                 warped_directions(mesh, frame), frame.sigma, roi);
}

std::vector<std::uint32_t> detect_singular_faces(std::span<const Triangle> triangles,
                                                 std::span<const Vec3> frame_dirs,
                                                 std::span<const Vec3> warped_dirs, WarpSigma sigma,
                                                 const RoiMask& roi) {
    const Vec3 north{0.0, 0.0, 1.0};
    const Vec3 south{0.0, 0.0, -1.0};
    const PolePair pre = pole_preimages(sigma);
    std::vector<std::uint32_t> out;
    for (auto t : roi.ids()) {
        const Triangle& tri = triangles[t];
        const Vec3& a = warped_dirs[tri[0]];
        const Vec3& b = warped_dirs[tri[1]];
        const Vec3& c = warped_dirs[tri[2]];
        const Vec3& ua = frame_dirs[tri[0]];
        const Vec3& ub = frame_dirs[tri[1]];
        const Vec3& uc = frame_dirs[tri[2]];
        if (spherical_triangle_contains(a, b, c, north) || spherical_triangle_contains(a, b, c, south) ||
            spherical_triangle_contains(ua, ub, uc, pre.north) ||
            spherical_triangle_contains(ua, ub, uc, pre.south)) {
            out.push_back(t);
        }
    }
    return out;
}

double triangle_angle_distortion(const Vec3& a, const Vec3& b, const Vec3& c, const ThetaPhi& ta,
                                 const ThetaPhi& tb, const ThetaPhi& tc) {
    const Vec3 pa{ta.phi, ta.theta, 0.0};
    const Vec3 pb{tb.phi, tb.theta, 0.0};
    const Vec3 pc{tc.phi, tc.theta, 0.0};
    const double e1 = norm(pb - pa);
    const double e2 = norm(pc - pa);
    const double area2 = std::abs(cross(pb - pa, pc - pa).z);
    if (!(area2 > 1e-14 * e1 * e2) || !(e1 > 0.0) || !(e2 > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    const auto angles3d = interior_angles(a, b, c);
    const auto angles2d = interior_angles(pa, pb, pc);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(angles3d[k] - angles2d[k]));
    }
    return worst;
}

DistortionStats triangle_distortion(const TriMesh& mesh, const ParamChart& chart) {
    return triangle_distortion(mesh, chart, RoiMask::all(mesh.num_triangles()));
}

DistortionStats triangle_distortion(const TriMesh& mesh, const ParamChart& chart, const RoiMask& roi) {
    if (chart.coords.size() != mesh.num_vertices()) {
        throw StructuralError("chart and mesh vertex counts differ");
    }
    DistortionStats stats;
    double sum = 0.0;
    std::size_t finite = 0;
    stats.min = std::numeric_limits<double>::infinity();
    stats.max = 0.0;
    for (auto t : roi.ids()) {
        const Triangle& tri = mesh.triangle(t);
        const double d = triangle_angle_distortion(
            mesh.vertex(tri[0]), mesh.vertex(tri[1]), mesh.vertex(tri[2]),
            project_theta_phi(chart.coords[tri[0]]), project_theta_phi(chart.coords[tri[1]]),
            project_theta_phi(chart.coords[tri[2]]));
        stats.triangles.push_back(t);
        stats.per_triangle.push_back(d);
        stats.min = std::min(stats.min, d);
        stats.max = std::max(stats.max, d);
        if (std::isfinite(d)) {
            sum += d;
            ++finite;
        } else {
            stats.degenerate.push_back(t);
        }
    }
    if (stats.triangles.empty()) {
        stats.min = 0.0;
    }
    stats.mean = finite > 0 ? sum / static_cast<double>(finite) : 0.0;
    return stats;
}

}  // namespace polewarp
