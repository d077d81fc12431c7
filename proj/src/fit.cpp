#include "polewarp/fit.hpp"

#include <cmath>
#include <sstream>

#include "polewarp/constants.hpp"
#include "polewarp/shapes.hpp"

namespace polewarp {

std::vector<double> grid_sigmas(const FitGrid& grid) {
    std::vector<double> out;
    if (grid.sigmas == 1) {
        out.push_back(grid.sigma_max);
        return out;
    }
    const double lo = std::log(grid.sigma_min);
    const double hi = std::log(grid.sigma_max);
    for (std::size_t k = 0; k < grid.sigmas; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(grid.sigmas - 1);
        out.push_back(k + 1 == grid.sigmas ? grid.sigma_max : std::exp(lo + (hi - lo) * t));
    }
    return out;
}

WarpFrame grid_frame(const FitGrid& grid, std::size_t pole_index, std::size_t roll_index,
                     std::size_t sigma_index) {
    const Vec3 dir = fibonacci_sphere(grid.pole_directions).at(pole_index);
    const double roll = kTwoPi * static_cast<double>(roll_index) / static_cast<double>(grid.rolls);
    const Rotation align = Rotation::align(dir, {0.0, 1.0, 0.0});
    const Rotation spin = Rotation::from_axis_angle({0.0, 1.0, 0.0}, roll);
    return {grid.center, spin.compose(align), WarpSigma(grid_sigmas(grid).at(sigma_index))};
}

FitResult fit_parameters(const TriMesh& mesh, const RoiMask& roi, const FitGrid& grid) {
    if (roi.empty()) {
        throw DomainError("fit requires a nonempty region of interest");
    }
    if (grid.pole_directions == 0 || grid.rolls == 0 || grid.sigmas == 0 ||
        !(grid.sigma_min > 0.0) || !(grid.sigma_max >= grid.sigma_min)) {
        throw DomainError("fit grid must have positive sizes and 0 < sigma_min <= sigma_max");
    }

    // Only ROI vertices take part; everything else keeps a placeholder direction.
    std::vector<char> used(mesh.num_vertices(), 0);
    for (auto t : roi.ids()) {
        for (auto v : mesh.triangle(t)) {
            used[v] = 1;
        }
    }
    std::vector<Triangle> roi_tris;
    std::vector<std::array<double, 3>> angles3d;
    for (auto t : roi.ids()) {
        const Triangle& tri = mesh.triangle(t);
        roi_tris.push_back(tri);
        angles3d.push_back(interior_angles(mesh.vertex(tri[0]), mesh.vertex(tri[1]), mesh.vertex(tri[2])));
    }
    const std::vector<Edge> roi_edges = unique_edges(roi_tris);

    const std::size_t total = grid.pole_directions * grid.rolls * grid.sigmas;
    FitResult best;
    best.max_distortion = std::numeric_limits<double>::infinity();
    bool found = false;
    std::size_t best_violations = std::numeric_limits<std::size_t>::max();
    WarpFrame closest;
    std::size_t closest_seams = 0, closest_singular = 0;

    std::vector<Vec3> dirs(mesh.num_vertices(), Vec3{0.0, 0.0, 0.0});
    std::vector<Vec3> unwarped(mesh.num_vertices(), Vec3{0.0, 0.0, 0.0});
    std::vector<ThetaPhi> tp(mesh.num_vertices());
    const Vec3 north{0.0, 0.0, 1.0}, south{0.0, 0.0, -1.0};

    for (std::size_t i = 0; i < grid.pole_directions; ++i) {
        for (std::size_t j = 0; j < grid.rolls; ++j) {
            for (std::size_t k = 0; k < grid.sigmas; ++k) {
                const WarpFrame frame = grid_frame(grid, i, j, k);
                const PolePair pre = pole_preimages(frame.sigma);
                ++best.candidates;
                bool ok = true;
                for (std::size_t v = 0; v < mesh.num_vertices() && ok; ++v) {
                    if (!used[v]) {
                        continue;
                    }
                    try {
                        unwarped[v] = frame_direction(mesh.vertex(v), frame, v);
                        dirs[v] = warped_direction(mesh.vertex(v), frame, v);
                    } catch (const Error&) {
                        ok = false;
                    }
                }
                if (!ok) {
                    continue;
                }
                std::size_t seams = 0, singular = 0;
                for (const Edge& e : roi_edges) {
                    seams += crosses_branch_cut(dirs[e.a], dirs[e.b]) ? 1 : 0;
                }
                for (const Triangle& tri : roi_tris) {
                    const Vec3 &a = dirs[tri[0]], &b = dirs[tri[1]], &c = dirs[tri[2]];
                    const Vec3 &ua = unwarped[tri[0]], &ub = unwarped[tri[1]], &uc = unwarped[tri[2]];
                    singular += (spherical_triangle_contains(a, b, c, north) ||
                                 spherical_triangle_contains(a, b, c, south) ||
                                 spherical_triangle_contains(ua, ub, uc, pre.north) ||
                                 spherical_triangle_contains(ua, ub, uc, pre.south)) ? 1 : 0;
                }
                if (seams + singular > 0) {
                    if (!found && seams + singular < best_violations) {
                        best_violations = seams + singular;
                        closest = frame;
                        closest_seams = seams;
                        closest_singular = singular;
                    }
                    continue;
                }
                ++best.feasible;
                for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
                    if (used[v]) {
                        tp[v] = project_theta_phi(cartesian_to_spherical(dirs[v]));
                    }
                }
                double worst = 0.0;
                for (std::size_t t = 0; t < roi_tris.size() && worst < best.max_distortion; ++t) {
                    const Triangle& tri = roi_tris[t];
                    const Vec3 pa{tp[tri[0]].phi, tp[tri[0]].theta, 0.0};
                    const Vec3 pb{tp[tri[1]].phi, tp[tri[1]].theta, 0.0};
                    const Vec3 pc{tp[tri[2]].phi, tp[tri[2]].theta, 0.0};
                    const double area2 = std::abs(cross(pb - pa, pc - pa).z);
                    if (!(area2 > 1e-14 * norm(pb - pa) * norm(pc - pa))) {
                        worst = std::numeric_limits<double>::infinity();
                        break;
                    }
                    const auto a2 = interior_angles(pa, pb, pc);
                    for (int q = 0; q < 3; ++q) {
                        worst = std::max(worst, std::abs(angles3d[t][q] - a2[q]));
                    }
                }
                if (worst < best.max_distortion) {
                    found = true;
                    best.frame = frame;
                    best.max_distortion = worst;
                    best.pole_index = i;
                    best.roll_index = j;
                    best.sigma_index = k;
                }
            }
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no feasible frame among " << total << " candidates; closest has " << closest_seams
            << " seam crossing(s) and " << closest_singular << " singular face(s)";
        throw InfeasibleFit(msg.str(), closest, closest_seams, closest_singular);
    }
    return best;
}

}  // namespace polewarp
