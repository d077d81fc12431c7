#include "polewarp/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "polewarp/alt_mapping.hpp"
#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"
#include "polewarp/obj_io.hpp"

namespace polewarp {

namespace {

struct Pt {
    double x, y;
};

std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

void header(std::ostream& out, const PlotSpec& spec) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height
        << "\">\n"
        << "<style>\n"
        << "  .grid, .edge, .roi-edge, .chord { fill: none; stroke: " << spec.stroke
        << "; stroke-width: " << fmt3(spec.stroke_width) << "; }\n"
        << "  .edge { stroke-opacity: 0.45; }\n"
        << "  .chord { stroke-dasharray: 4 3; stroke-opacity: 0.6; }\n"
        << "  .roi { fill: " << spec.roi_fill << "; stroke: none; }\n"
        << "  .alert { fill: none; stroke: " << spec.alert << "; stroke-width: "
        << fmt3(2.0 * spec.stroke_width) << "; }\n"
        << "  .pole { fill: " << spec.alert << "; stroke: none; }\n"
        << "  .frame { fill: none; stroke: #555555; stroke-width: 1; }\n"
        << "  text { font-family: sans-serif; font-size: 12px; fill: #222222; }\n"
        << "</style>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"#ffffff\"/>\n";
}

void polyline(std::ostream& out, const std::vector<Pt>& pts, const char* cls) {
    if (pts.size() < 2) {
        return;
    }
    out << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i ? " " : "") << fmt3(pts[i].x) << ',' << fmt3(pts[i].y);
    }
    out << "\"/>\n";
}

void line(std::ostream& out, Pt a, Pt b, const char* cls) {
    out << "<line class=\"" << cls << "\" x1=\"" << fmt3(a.x) << "\" y1=\"" << fmt3(a.y) << "\" x2=\""
        << fmt3(b.x) << "\" y2=\"" << fmt3(b.y) << "\"/>\n";
}

void polygon(std::ostream& out, Pt a, Pt b, Pt c, const char* cls) {
    out << "<polygon class=\"" << cls << "\" points=\"" << fmt3(a.x) << ',' << fmt3(a.y) << ' '
        << fmt3(b.x) << ',' << fmt3(b.y) << ' ' << fmt3(c.x) << ',' << fmt3(c.y) << "\"/>\n";
}

void marker(std::ostream& out, const char* id, Pt p) {
    out << "<circle id=\"" << id << "\" class=\"pole\" cx=\"" << fmt3(p.x) << "\" cy=\"" << fmt3(p.y)
        << "\" r=\"3\"/>\n";
}

/// Sample a unit-sphere curve, warp it and emit it in theta-phi space, split
/// wherever the azimuth jumps across the branch cut or around a pole.
/// Samples landing on a chart pole take the azimuth of their neighbour.
template <class Curve>
void warped_curve_theta_phi(std::ostream& out, const ChartViewport& vp, WarpSigma sigma,
                            int samples, Curve curve) {
    std::vector<SphericalCoord> cs;
    std::vector<char> on_pole;
    for (int s = 0; s <= samples; ++s) {
        const Vec3 w = warp_poles(curve(static_cast<double>(s) / samples), sigma);
        cs.push_back(cartesian_to_spherical(w));
        on_pole.push_back(std::hypot(w.x, w.y) < 1e-12);
    }
    for (std::size_t i = 1; i < cs.size(); ++i) {
        if (on_pole[i] && !on_pole[i - 1]) {
            cs[i].phi = cs[i - 1].phi;
            on_pole[i] = 0;
        }
    }
    for (std::size_t i = cs.size() - 1; i-- > 0;) {
        if (on_pole[i] && !on_pole[i + 1]) {
            cs[i].phi = cs[i + 1].phi;
            on_pole[i] = 0;
        }
    }
    std::vector<Pt> run;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!run.empty() && std::abs(cs[i].phi - cs[i - 1].phi) > kHalfPi) {
            polyline(out, run, "grid");
            run.clear();
        }
        run.push_back({vp.x(cs[i].phi), vp.y(cs[i].theta)});
    }
    polyline(out, run, "grid");
}

struct SquareViewport {
    double cx, cy, scale;
    Pt map(double u, double v) const { return {cx + scale * u, cy - scale * v}; }
};

SquareViewport square_viewport(const PlotSpec& spec) {
    const double half = 0.5 * std::min(spec.width - 2.0 * spec.margin, spec.height - 2.0 * spec.margin);
    return {0.5 * spec.width, 0.5 * spec.height, half / 1.05};
}

Vec3 latitude_point(double theta, double t) {
    const double phi = -kPi + kTwoPi * t;
    return spherical_to_cartesian({theta, phi, 1.0});
}

Vec3 meridian_point(double phi, double t) { return spherical_to_cartesian({kPi * t, phi, 1.0}); }

void open_or_throw(std::ofstream& f, const std::filesystem::path& p) {
    f.open(p);
    if (!f) {
        throw Error("cannot open '" + p.string() + "' for writing");
    }
}

}  // namespace

void validate(const PlotSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) {
        throw DomainError("plot dimensions must be positive");
    }
    if (spec.latitudes < 0 || spec.longitudes < 0 || spec.samples < 1) {
        throw DomainError("plot grid counts must be non-negative");
    }
    if (!(spec.margin >= 0.0) || 2.0 * spec.margin >= std::min(spec.width, spec.height)) {
        throw DomainError("plot margin leaves no drawing area");
    }
}

ChartViewport::ChartViewport(const PlotSpec& spec)
    : left_(spec.margin), top_(spec.margin), w_(spec.width - 2.0 * spec.margin),
      h_(spec.height - 2.0 * spec.margin) {}

double ChartViewport::x(double phi) const { return left_ + (phi + kPi) / kTwoPi * w_; }

double ChartViewport::y(double theta) const { return top_ + theta / kPi * h_; }

void plot_warp_grid(WarpSigma sigma, const PlotSpec& spec, std::ostream& out, PlotPlane plane) {
    validate(spec);
    header(out, spec);
    const PolePair poles = warped_pole_positions(sigma);

    if (plane == PlotPlane::ThetaPhi) {
        const ChartViewport vp(spec);
        out << "<rect class=\"frame\" x=\"" << fmt3(vp.x(-kPi)) << "\" y=\"" << fmt3(vp.y(0.0))
            << "\" width=\"" << fmt3(vp.x(kPi) - vp.x(-kPi)) << "\" height=\""
            << fmt3(vp.y(kPi) - vp.y(0.0)) << "\"/>\n";
        out << "<g id=\"latitudes\">\n";
        for (int i = 1; i <= spec.latitudes; ++i) {
            const double theta = kPi * i / (spec.latitudes + 1);
            warped_curve_theta_phi(out, vp, sigma, spec.samples,
                                   [theta](double t) { return latitude_point(theta, t); });
        }
        out << "</g>\n<g id=\"meridians\">\n";
        for (int j = 0; j < spec.longitudes; ++j) {
            const double phi = -kPi + kTwoPi * (j + 0.5) / spec.longitudes;
            warped_curve_theta_phi(out, vp, sigma, spec.samples,
                                   [phi](double t) { return meridian_point(phi, t); });
        }
        out << "</g>\n";
        const SphericalCoord n = cartesian_to_spherical(poles.north);
        const SphericalCoord s = cartesian_to_spherical(poles.south);
        marker(out, "pole-north", {vp.x(n.phi), vp.y(n.theta)});
        marker(out, "pole-south", {vp.x(s.phi), vp.y(s.theta)});
    } else {
        const SquareViewport vp = square_viewport(spec);
        const bool xy = plane == PlotPlane::XY;
        auto proj = [&](const Vec3& p) { return xy ? vp.map(p.x, p.y) : vp.map(p.y, p.z); };
        out << "<circle class=\"frame\" cx=\"" << fmt3(vp.cx) << "\" cy=\"" << fmt3(vp.cy) << "\" r=\""
            << fmt3(vp.scale) << "\"/>\n<g id=\"latitudes\">\n";
        for (int i = 1; i <= spec.latitudes; ++i) {
            const double theta = kPi * i / (spec.latitudes + 1);
            std::vector<Pt> pts;
            for (int s = 0; s <= spec.samples; ++s) {
                pts.push_back(proj(warp_poles(latitude_point(theta, double(s) / spec.samples), sigma)));
            }
            polyline(out, pts, "grid");
        }
        out << "</g>\n";
        if (!xy) {
            const DistortedPole pole = sigma_angle_from_warp(sigma);
            out << "<g id=\"chords\">\n";
            const int n = 2 * (spec.latitudes + 1);
            for (int k = 0; k <= n; ++k) {
                const Chord c = chord_for_phi(kPi * k / n, pole);
                line(out, vp.map(c.a.y, c.a.z), vp.map(c.b.y, c.b.z), "chord");
            }
            out << "</g>\n";
        }
        marker(out, "pole-north", proj(poles.north));
        marker(out, "pole-south", proj(poles.south));
    }
    out << "<text x=\"" << fmt3(spec.margin) << "\" y=\"" << fmt3(spec.height - 6.0)
        << "\">sigma = " << format_g9(sigma.value()) << "</text>\n</svg>\n";
}

void plot_warp_grid(WarpSigma sigma, const PlotSpec& spec, const std::filesystem::path& out_path,
                    PlotPlane plane) {
    std::ofstream f;
    open_or_throw(f, out_path);
    plot_warp_grid(sigma, spec, f, plane);
}

void plot_chart(const ParamChart& chart, const RoiMask& roi, const WarpFrame& frame,
                const PlotSpec& spec, std::ostream& out) {
    validate(spec);
    const ChartViewport vp(spec);
    header(out, spec);
    auto at = [&](std::uint32_t v) {
        const SphericalCoord& c = chart.coords.at(v);
        return Pt{vp.x(c.phi), vp.y(c.theta)};
    };
    out << "<rect class=\"frame\" x=\"" << fmt3(vp.x(-kPi)) << "\" y=\"" << fmt3(vp.y(0.0))
        << "\" width=\"" << fmt3(vp.x(kPi) - vp.x(-kPi)) << "\" height=\"" << fmt3(vp.y(kPi) - vp.y(0.0))
        << "\"/>\n<g id=\"roi\">\n";
    for (auto t : roi.ids()) {
        const Triangle& tri = chart.triangles.at(t);
        polygon(out, at(tri[0]), at(tri[1]), at(tri[2]), "roi");
    }
    out << "</g>\n";

    const std::vector<Edge> edges = unique_edges(chart.triangles);
    std::vector<char> in_roi(edges.size(), 0), alert(edges.size(), 0);
    auto edge_id = [&](std::uint32_t u, std::uint32_t v) {
        const Edge e{std::min(u, v), std::max(u, v)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    for (auto t : roi.ids()) {
        const Triangle& tri = chart.triangles[t];
        for (int k = 0; k < 3; ++k) {
            in_roi[edge_id(tri[k], tri[(k + 1) % 3])] = 1;
        }
    }
    for (auto e : chart.diagnostics.seam_crossings) {
        alert.at(e) = 1;
    }
    out << "<g id=\"wireframe\">\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (alert[i]) {
            continue;
        }
        const auto& e = edges[i];
        if (wraps_azimuth(chart.coords[e.a].phi, chart.coords[e.b].phi)) {
            continue;
        }
        line(out, at(e.a), at(e.b), in_roi[i] ? "roi-edge" : "edge");
    }
    out << "</g>\n<g id=\"alerts\">\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (alert[i]) {
            line(out, at(edges[i].a), at(edges[i].b), "alert");
        }
    }
    for (auto t : chart.diagnostics.singular_faces) {
        const Triangle& tri = chart.triangles.at(t);
        polygon(out, at(tri[0]), at(tri[1]), at(tri[2]), "alert");
    }
    const AxisAngle aa = frame.rotation.axis_angle();
    out << "</g>\n<text x=\"" << fmt3(spec.margin) << "\" y=\"" << fmt3(spec.height - 6.0)
        << "\">sigma = " << format_g9(frame.sigma.value()) << "; rotation = "
        << format_g9(aa.angle * 180.0 / kPi) << " deg about (" << format_g9(aa.axis.x) << ", "
        << format_g9(aa.axis.y) << ", " << format_g9(aa.axis.z) << "); seam crossings = "
        << chart.diagnostics.seam_crossings.size()
        << "; singular faces = " << chart.diagnostics.singular_faces.size() << "</text>\n</svg>\n";
}

void plot_chart(const ParamChart& chart, const RoiMask& roi, const WarpFrame& frame,
                const PlotSpec& spec, const std::filesystem::path& out_path) {
    std::ofstream f;
    open_or_throw(f, out_path);
    plot_chart(chart, roi, frame, spec, f);
}

}  // namespace polewarp
