#include "polewarp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "polewarp/chart_io.hpp"
#include "polewarp/constants.hpp"
#include "polewarp/fit.hpp"
#include "polewarp/obj_io.hpp"
#include "polewarp/star_shaped.hpp"
#include "polewarp/svg_plot.hpp"

namespace polewarp {

namespace {

Vec3 parse_triplet(const std::string& text, const char* flag) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
            throw CLI::ValidationError(flag, "expected x,y,z but got '" + text + "'");
        }
        vals.push_back(v);
    }
    if (vals.size() != 3) {
        throw CLI::ValidationError(flag, "expected x,y,z but got '" + text + "'");
    }
    return {vals[0], vals[1], vals[2]};
}

std::string triplet(const Vec3& v) {
    return format_g9(v.x) + "," + format_g9(v.y) + "," + format_g9(v.z);
}

struct FrameFlags {
    double sigma = 1.0;
    std::string axis = "0,0,1";
    double degrees = 0.0;
    std::string center = "0,0,0";

    void attach(CLI::App* app) {
        app->add_option("--sigma", sigma, "warp scale sigma > 0 (1 = no warp)");
        app->add_option("--rotate-axis", axis, "rotation axis x,y,z");
        app->add_option("--rotate-deg", degrees, "rotation angle in degrees");
        app->add_option("--center", center, "star center x,y,z");
    }

    WarpFrame frame() const {
        const Vec3 ax = parse_triplet(axis, "--rotate-axis");
        const Vec3 c = parse_triplet(center, "--center");
        if (!(sigma > 0.0) || !std::isfinite(sigma)) {
            throw CLI::ValidationError("--sigma", "must be positive and finite");
        }
        if (norm(ax) == 0.0) {
            throw CLI::ValidationError("--rotate-axis", "must be nonzero");
        }
        return {c, Rotation::from_axis_angle(ax, degrees * kPi / 180.0), WarpSigma(sigma)};
    }
};

std::string frame_flags(const WarpFrame& f) {
    const AxisAngle aa = f.rotation.axis_angle();
    return "--center " + triplet(f.translation) + " --rotate-axis " + triplet(aa.axis) +
           " --rotate-deg " + format_g9(aa.angle * 180.0 / kPi) + " --sigma " + format_g9(f.sigma.value());
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) {
        throw Error("cannot open '" + path + "' for writing");
    }
    return f;
}

RoiMask roi_or_all(const std::string& path, const TriMesh& mesh) {
    return path.empty() ? RoiMask::all(mesh.num_triangles()) : load_roi(path, mesh.num_triangles());
}

void write_chart_files(const ParamChart& chart, const WarpFrame& frame, const RoiMask& roi,
                       const std::string& chart_path, const std::string& diag_path) {
    {
        auto f = open_out(chart_path);
        write_chart_obj(chart, f);
    }
    auto d = open_out(diag_path.empty() ? chart_path + ".diag.txt" : diag_path);
    write_diagnostics(chart, frame, roi, d);
}

struct PlotFlags {
    PlotSpec spec;
    void attach(CLI::App* app) {
        app->add_option("--width", spec.width, "width in pixels");
        app->add_option("--height", spec.height, "height in pixels");
    }
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distorted-pole spherical charts for star-shaped triangle meshes", "polewarp"};
    app.require_subcommand(1);

    std::string in_path, out_path, roi_path, diag_path, chart_path, plane = "thetaphi";
    FrameFlags ff;
    PlotFlags pf;
    std::size_t samples = 256;
    FitGrid grid;

    auto* transform = app.add_subcommand("transform", "warp a mesh: r * warp(rotate(v - center))");
    transform->add_option("input", in_path, "input OBJ")->required();
    transform->add_option("output", out_path, "output OBJ")->required();
    ff.attach(transform);

    auto* flatten = app.add_subcommand("flatten", "map a mesh to a theta-phi chart OBJ plus diagnostics");
    flatten->add_option("input", in_path, "input OBJ")->required();
    flatten->add_option("output", out_path, "chart OBJ")->required();
    flatten->add_option("--roi", roi_path, "ROI triangle id file (default: all triangles)");
    flatten->add_option("--diagnostics", diag_path, "diagnostics report (default: <output>.diag.txt)");
    ff.attach(flatten);

    auto* invert = app.add_subcommand("invert", "map a chart OBJ back to Cartesian space");
    invert->add_option("input", in_path, "chart OBJ")->required();
    invert->add_option("output", out_path, "output OBJ")->required();
    ff.attach(invert);

    auto* validate_cmd = app.add_subcommand("validate", "check star-shapedness about the origin");
    validate_cmd->add_option("input", in_path, "input OBJ")->required();
    validate_cmd->add_option("--samples", samples, "extra Fibonacci-sphere ray directions");
    validate_cmd->add_option("--center", ff.center, "star center x,y,z");

    auto* fit = app.add_subcommand("fit", "grid-search a cohesive frame for a region of interest");
    fit->add_option("input", in_path, "input OBJ")->required();
    fit->add_option("--roi", roi_path, "ROI triangle id file")->required();
    fit->add_option("--chart", chart_path, "also write the fitted chart OBJ");
    fit->add_option("--diagnostics", diag_path, "diagnostics report for --chart");
    fit->add_option("--center", ff.center, "star center x,y,z");
    fit->add_option("--poles", grid.pole_directions, "pole directions on a Fibonacci sphere");
    fit->add_option("--rolls", grid.rolls, "roll angles per pole direction");
    fit->add_option("--sigmas", grid.sigmas, "log-spaced sigma values");
    fit->add_option("--sigma-min", grid.sigma_min, "smallest sigma");
    fit->add_option("--sigma-max", grid.sigma_max, "largest sigma");

    auto* plot_grid = app.add_subcommand("plot-grid", "SVG of the warped latitude/longitude grid");
    plot_grid->add_option("output", out_path, "output SVG")->required();
    plot_grid->add_option("--sigma", ff.sigma, "warp scale sigma > 0");
    plot_grid->add_option("--plane", plane, "thetaphi, xy or yz")
        ->check(CLI::IsMember({"thetaphi", "xy", "yz"}));
    plot_grid->add_option("--latitudes", pf.spec.latitudes, "latitude circles");
    plot_grid->add_option("--longitudes", pf.spec.longitudes, "meridians");
    pf.attach(plot_grid);

    auto* plot_chart_cmd = app.add_subcommand("plot-chart", "SVG wireframe of a mesh's chart");
    plot_chart_cmd->add_option("input", in_path, "input OBJ")->required();
    plot_chart_cmd->add_option("output", out_path, "output SVG")->required();
    plot_chart_cmd->add_option("--roi", roi_path, "ROI triangle id file (default: none)");
    ff.attach(plot_chart_cmd);
    pf.attach(plot_chart_cmd);

    std::vector<std::string> storage{"polewarp"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*transform) {
            const WarpFrame frame = ff.frame();
            const TriMesh mesh = load_obj(in_path);
            std::vector<Vec3> verts;
            verts.reserve(mesh.num_vertices());
            for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
                const double r = norm(mesh.vertex(i) - frame.translation);
                verts.push_back(r * warped_direction(mesh.vertex(i), frame, i));
            }
            save_obj(TriMesh(std::move(verts), mesh.triangles()), out_path);
        } else if (*flatten) {
            const WarpFrame frame = ff.frame();
            const TriMesh mesh = load_obj(in_path);
            const RoiMask roi = roi_or_all(roi_path, mesh);
            const ParamChart chart = forward_chart(mesh, frame, roi);
            write_chart_files(chart, frame, roi, out_path, diag_path);
            out << "cohesive\t" << (chart.cohesive() ? "true" : "false") << '\n';
        } else if (*invert) {
            const WarpFrame frame = ff.frame();
            const Reconstruction rec = inverse_chart(load_chart_obj(in_path), frame);
            for (auto v : rec.pole_ambiguous) {
                err << "warning: vertex " << v << " sits on a chart pole; its azimuth is ambiguous\n";
            }
            save_obj(rec.mesh, out_path);
        } else if (*validate_cmd) {
            const Vec3 center = parse_triplet(ff.center, "--center");
            const TriMesh mesh = load_obj(in_path).translated(-center);
            StarReport rep;
            try {
                rep = validate_star_shaped(mesh, samples);
            } catch (const StructuralError& e) {
                out << "star_shaped\tfalse\n";
                err << "error: " << e.what() << '\n';
                return kExitFailure;
            }
            out << "star_shaped\t" << (rep.is_star_shaped ? "true" : "false") << '\n';
            out << "samples_tested\t" << rep.samples_tested << '\n';
            out << "offending_directions\t" << rep.offending_directions.size() << '\n';
            for (std::size_t i = 0; i < rep.offending_directions.size() && i < 20; ++i) {
                const auto& o = rep.offending_directions[i];
                out << "offending\t" << triplet(o.direction) << '\t' << o.hit_count << '\n';
            }
            return rep.is_star_shaped ? kExitOk : kExitFailure;
        } else if (*fit) {
            grid.center = parse_triplet(ff.center, "--center");
            const TriMesh mesh = load_obj(in_path);
            const RoiMask roi = load_roi(roi_path, mesh.num_triangles());
            try {
                const FitResult res = fit_parameters(mesh, roi, grid);
                const ParamChart chart = forward_chart(mesh, res.frame, roi);
                out << frame_flags(res.frame) << '\n';
                out << "seam_crossings\t" << chart.diagnostics.seam_crossings.size() << '\n';
                out << "singular_faces\t" << chart.diagnostics.singular_faces.size() << '\n';
                out << "max_distortion\t" << format_g9(res.max_distortion) << '\n';
                out << "candidates\t" << res.candidates << '\n';
                out << "feasible\t" << res.feasible << '\n';
                if (!chart_path.empty()) {
                    write_chart_files(chart, res.frame, roi, chart_path, diag_path);
                }
            } catch (const InfeasibleFit& e) {
                err << "error: " << e.what() << '\n';
                err << "closest\t" << frame_flags(e.best_effort()) << '\n';
                return kExitFailure;
            }
        } else if (*plot_grid) {
            const PlotPlane p = plane == "xy" ? PlotPlane::XY
                                : plane == "yz" ? PlotPlane::YZ
                                                : PlotPlane::ThetaPhi;
            if (!(ff.sigma > 0.0) || !std::isfinite(ff.sigma)) {
                throw CLI::ValidationError("--sigma", "must be positive and finite");
            }
            plot_warp_grid(WarpSigma(ff.sigma), pf.spec, std::filesystem::path(out_path), p);
        } else if (*plot_chart_cmd) {
            const WarpFrame frame = ff.frame();
            const TriMesh mesh = load_obj(in_path);
            const RoiMask roi = roi_path.empty() ? RoiMask{} : load_roi(roi_path, mesh.num_triangles());
            const ParamChart chart = forward_chart(mesh, frame, roi);
            plot_chart(chart, roi, frame, pf.spec, std::filesystem::path(out_path));
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace polewarp
