#pragma once

#include <cstddef>
#include <limits>

#include "polewarp/errors.hpp"
#include "polewarp/pipeline.hpp"

namespace polewarp {

/// Candidate grid for fit_parameters.
///
/// A candidate is (pole direction i, roll j, sigma k). The rotation takes
/// model direction i onto +y, where the warp gathers the chart's poles and
/// branch cut, then rolls by angle j about +y. Sigmas are log-spaced from
/// sigma_min to sigma_max inclusive. Candidates are visited in lexicographic
/// (i, j, k) order and ties keep the earliest.
struct FitGrid {
    std::size_t pole_directions = 64;
    std::size_t rolls = 8;
    std::size_t sigmas = 16;
    double sigma_min = 0.05;
    double sigma_max = 1.0;
    Vec3 center{};
};

struct FitResult {
    WarpFrame frame;
    double max_distortion = 0.0;
    std::size_t pole_index = 0;
    std::size_t roll_index = 0;
    std::size_t sigma_index = 0;
    std::size_t candidates = 0;
    std::size_t feasible = 0;
};

/// Raised when no grid candidate yields a cohesive ROI chart. Reports the
/// candidate that came closest (fewest seam crossings plus singular faces).
class InfeasibleFit : public Error {
public:
    InfeasibleFit(const std::string& msg, WarpFrame best, std::size_t seams, std::size_t singular)
        : Error(msg), best_(best), seams_(seams), singular_(singular) {}

    const WarpFrame& best_effort() const noexcept { return best_; }
    std::size_t seam_crossings() const noexcept { return seams_; }
    std::size_t singular_faces() const noexcept { return singular_; }

private:
    WarpFrame best_;
    std::size_t seams_;
    std::size_t singular_;
};

/// Sigma values of the grid, ascending.
std::vector<double> grid_sigmas(const FitGrid& grid);

/// The frame for grid indices (i, j, k).
WarpFrame grid_frame(const FitGrid& grid, std::size_t pole_index, std::size_t roll_index,
                     std::size_t sigma_index);

/// Grid search for the frame minimizing the worst ROI angle distortion
/// subject to no seam crossings and no singular faces in the ROI.
/// Throws DomainError for an empty ROI or grid, InfeasibleFit when nothing qualifies.
FitResult fit_parameters(const TriMesh& mesh, const RoiMask& roi, const FitGrid& grid = {});

}  // namespace polewarp
