#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "polewarp/pipeline.hpp"

namespace polewarp {

/// Styling and layout of an SVG plot. In theta-phi plots phi runs left to
/// right over (-pi, pi] and theta top to bottom over [0, pi].
struct PlotSpec {
    int width = 960;
    int height = 480;
    double margin = 24.0;
    int latitudes = 17;   ///< latitude circles drawn by plot_warp_grid
    int longitudes = 24;  ///< meridians drawn by plot_warp_grid
    int samples = 512;    ///< points per grid curve
    double stroke_width = 0.8;
    std::string stroke = "#1f4e79";
    std::string alert = "#d62728";
    std::string roi_fill = "#9ecae1";
};

/// Throws DomainError for non-positive dimensions, negative grid counts or a
/// margin that leaves no drawing area.
void validate(const PlotSpec& spec);

/// Maps chart coordinates onto the drawing area of a theta-phi plot.
class ChartViewport {
public:
    explicit ChartViewport(const PlotSpec& spec);
    double x(double phi) const;
    double y(double theta) const;

private:
    double left_, top_, w_, h_;
};

enum class PlotPlane {
    ThetaPhi,  ///< warped grid in theta-phi space
    XY,        ///< warped latitudes projected on XY (ellipses)
    YZ,        ///< warped latitudes projected on YZ, with the chord family overlaid
};

/// Images of the unit sphere's latitude circles and meridians under the warp.
/// Pole images are marked by circles with ids `pole-north` and `pole-south`.
void plot_warp_grid(WarpSigma sigma, const PlotSpec& spec, std::ostream& out,
                    PlotPlane plane = PlotPlane::ThetaPhi);
void plot_warp_grid(WarpSigma sigma, const PlotSpec& spec, const std::filesystem::path& out_path,
                    PlotPlane plane = PlotPlane::ThetaPhi);

/// Wireframe of a chart in theta-phi space. ROI faces are filled; seam
/// crossings and singular faces from the chart diagnostics are drawn with
/// class "alert"; edges of non-ROI triangles that wrap across the branch cut
/// are omitted. The legend summarizes sigma and the rotation.
void plot_chart(const ParamChart& chart, const RoiMask& roi, const WarpFrame& frame,
                const PlotSpec& spec, std::ostream& out);
void plot_chart(const ParamChart& chart, const RoiMask& roi, const WarpFrame& frame,
                const PlotSpec& spec, const std::filesystem::path& out_path);

}  // namespace polewarp
