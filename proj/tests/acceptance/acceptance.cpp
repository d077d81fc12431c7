// Acceptance checks. One line per criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "polewarp/alt_mapping.hpp"
#include "polewarp/chart_io.hpp"
#include "polewarp/cli.hpp"
#include "polewarp/constants.hpp"
#include "polewarp/fit.hpp"
#include "polewarp/obj_io.hpp"
#include "polewarp/shapes.hpp"
#include "polewarp/star_shaped.hpp"
#include "test_support.hpp"

using namespace polewarp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

const double kSigmas[] = {0.05, 0.1, 0.3, 1.0, 3.0, 10.0};

Outcome warp_round_trip(const std::vector<Vec3>& pts) {
    double worst = 0.0;
    for (double s : kSigmas) {
        for (const Vec3& p : pts) {
            worst = std::max(worst, distance(unwarp_poles(warp_poles(p, WarpSigma(s)), WarpSigma(s)), p));
        }
    }
    return {worst <= 1e-9, fmt("max |unwarp(warp(p)) - p| = %.3g (limit 1e-9)", worst)};
}

Outcome identity_at_one(const std::vector<Vec3>& pts) {
    double worst = 0.0;
    for (const Vec3& p : pts) {
        worst = std::max(worst, distance(warp_poles(p, WarpSigma(1.0)), p));
    }
    return {worst <= 1e-12, fmt("max |warp(p, 1) - p| = %.3g (limit 1e-12)", worst)};
}

Outcome expanded_oracle(const std::vector<Vec3>& pts) {
    double worst = 0.0;
    for (double s : kSigmas) {
        for (const Vec3& p : pts) {
            worst = std::max(worst, distance(warp_poles(p, WarpSigma(s)), warp_expanded_oracle(p, WarpSigma(s))));
        }
    }
    return {worst <= 1e-12, fmt("max |warp - expanded| = %.3g (limit 1e-12)", worst)};
}

Outcome circles_to_circles() {
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double theta = kPi * (i + 0.5) / 32;
        std::vector<Vec3> img;
        for (int k = 0; k < 256; ++k) {
            const double phi = kTwoPi * k / 256;
            img.push_back(warp_poles(spherical_to_cartesian({theta, phi, 1.0}), WarpSigma(0.3)));
        }
        worst = std::max(worst, testing::circle_fit_rms(img));
    }
    return {worst <= 1e-9, fmt("worst circle-fit RMS = %.3g over 32 x 256 (limit 1e-9)", worst)};
}

Outcome conformality() {
    std::mt19937_64 rng(505);
    const double h = 1e-6;
    double worst = 0.0;
    int tested = 0;
    while (tested < 1000) {
        const Vec3 p = testing::random_unit(rng);
        if (1 - p.y < 1e-3) {
            continue;
        }
        const Vec3 t1 = testing::random_tangent(p, rng);
        const Vec3 t2 = testing::random_tangent(p, rng);
        const double s = kSigmas[tested % 6];
        auto image_tangent = [&](const Vec3& t) {
            const Vec3 fwd = warp_poles(p * std::cos(h) + t * std::sin(h), WarpSigma(s));
            const Vec3 bwd = warp_poles(p * std::cos(h) - t * std::sin(h), WarpSigma(s));
            return fwd - bwd;
        };
        const double before = angle_between(t1, t2);
        const double after = angle_between(image_tangent(t1), image_tangent(t2));
        worst = std::max(worst, std::abs(after - before));
        ++tested;
    }
    return {worst <= 1e-5, fmt("max tangent angle change = %.3g rad over 1000 points (limit 1e-5)", worst)};
}

Outcome spherical_round_trip() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> scale(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const Vec3 p = testing::random_unit(rng) * std::pow(10.0, scale(rng));
        worst = std::max(worst, distance(spherical_to_cartesian(cartesian_to_spherical(p)), p) / norm(p));
    }
    return {worst <= 1e-12, fmt("max relative error = %.3g (limit 1e-12)", worst)};
}

Outcome alt_mapping_solver() {
    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    int queries = 0;
    bool f1_exact = true;
    for (double s : {0.05, 0.3, 1.0, 3.0}) {
        const DistortedPole pole = sigma_angle_from_warp(WarpSigma(s));
        for (int i = 0; i < 2500; ++i) {
            const bool upper = i % 2 == 1;
            const double phi = upper ? kHalfPi + 1e-3 + (kHalfPi - 2e-3) * unit(rng)
                                     : 1e-3 + (kHalfPi - 2e-3) * unit(rng);
            const Chord c = chord_for_phi(phi, pole);
            const double lambda = 0.02 + 0.96 * unit(rng);
            const double py = c.a.y + lambda * (c.b.y - c.a.y);
            const double pz = c.a.z + lambda * (c.b.z - c.a.z);
            PhiSolveOptions opts;
            opts.branch = upper ? ChordBranch::Upper : ChordBranch::Lower;
            worst = std::max(worst, std::abs(f2_phi(py, pz, pole, opts).phi - phi));
            ++queries;

            const double px = 2 * unit(rng) - 1;
            const ThetaResult t = f1_theta(px, py, pole);
            double expect = std::atan2(py - pole.position().y, px);
            if (expect == -kPi) {
                expect = kPi;
            }
            f1_exact = f1_exact && (t.theta == expect);
        }
    }
    std::string detail = fmt("%.0f chord queries, max phi error = %.3g (limit 1e-8); ", queries, worst);
    detail += f1_exact ? "f1 bitwise equal to atan2" : "f1 differs from atan2";
    return {worst <= 1e-8 && f1_exact && queries == 10000, detail};
}

Outcome star_shapedness() {
    const bool ico = validate_star_shaped(make_icosphere(3), 512).is_star_shaped;
    const bool torus = validate_star_shaped(make_torus(1.0, 0.35, 48, 16), 512).is_star_shaped;
    const bool moved = validate_star_shaped(make_icosphere(3).translated({0, 0, 2}), 512).is_star_shaped;
    const bool ball = validate_star_shaped(make_radial_noise_ball(3, 0.3, 7), 512).is_star_shaped;
    std::string d = std::string("icosphere ") + (ico ? "true" : "false") + ", torus " + (torus ? "true" : "false") +
                    ", displaced icosphere " + (moved ? "true" : "false") + ", noise ball " +
                    (ball ? "true" : "false");
    return {ico && !torus && !moved && ball, d};
}

Outcome cap_band_demo() {
    const TriMesh mesh = make_icosphere(3);
    const RoiMask roi(cap_band_triangles(mesh, -0.25), mesh.num_triangles());
    const ParamChart before = forward_chart(mesh, WarpFrame::identity(), roi);
    const std::size_t seams0 = before.diagnostics.seam_crossings.size();
    const std::size_t sing0 = before.diagnostics.singular_faces.size();
    const FitResult fit = fit_parameters(mesh, roi);
    const std::size_t seams1 = detect_seam_crossings(mesh, fit.frame, roi).size();
    const std::size_t sing1 = detect_singular_faces(mesh, fit.frame, roi).size();
    const ParamChart after = forward_chart(mesh, fit.frame, roi);
    const TriMesh back = inverse_chart(after, fit.frame).mesh;
    double err = 0.0;
    for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
        err = std::max(err, distance(back.vertex(i), mesh.vertex(i)));
    }
    std::ostringstream d;
    d << "identity: " << seams0 << " seam / " << sing0 << " singular; fitted sigma "
      << format_g9(fit.frame.sigma.value()) << ": " << seams1 << " seam / " << sing1
      << " singular; round trip " << fmt("%.3g", err) << " (limit 1e-9)";
    const bool pass = seams0 > 0 && sing0 > 0 && seams1 == 0 && sing1 == 0 && after.cohesive() &&
                      fit.frame.sigma.value() < 1.0 && err <= 1e-9;
    return {pass, d.str()};
}

Outcome whole_sphere() {
    const TriMesh mesh = make_icosphere(3);
    try {
        const FitResult r = fit_parameters(mesh, RoiMask::all(mesh.num_triangles()));
        return {false, "fit returned a frame with sigma " + format_g9(r.frame.sigma.value())};
    } catch (const InfeasibleFit& e) {
        std::ostringstream d;
        d << "InfeasibleFit; closest candidate has " << e.seam_crossings() << " seam / "
          << e.singular_faces() << " singular";
        return {true, d.str()};
    }
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / "polewarp_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const TriMesh mesh = make_icosphere(3);
    save_obj(mesh, dir / "band.obj");
    {
        std::ofstream roi(dir / "band.roi");
        write_roi(RoiMask(cap_band_triangles(mesh, -0.25), mesh.num_triangles()), roi);
    }
    bool ok = true;
    for (const char* run : {"1", "2"}) {
        const std::string tag(run);
        std::ostringstream out, err;
        ok = ok && cli_main({"flatten", (dir / "band.obj").string(), (dir / ("chart" + tag + ".obj")).string(),
                             "--roi", (dir / "band.roi").string(), "--sigma", "0.3", "--rotate-axis", "1,0,0",
                             "--rotate-deg", "90"},
                            out, err) == kExitOk;
        ok = ok && cli_main({"plot-grid", (dir / ("grid" + tag + ".svg")).string(), "--sigma", "0.3"}, out, err) ==
                       kExitOk;
    }
    const bool same_chart = slurp(dir / "chart1.obj") == slurp(dir / "chart2.obj") &&
                            slurp(dir / "chart1.obj.diag.txt") == slurp(dir / "chart2.obj.diag.txt");
    const bool same_grid = slurp(dir / "grid1.svg") == slurp(dir / "grid2.svg");
    const bool nonempty = !slurp(dir / "chart1.obj").empty() && !slurp(dir / "grid1.svg").empty();
    fs::remove_all(dir);
    std::string d = std::string("flatten ") + (same_chart ? "identical" : "differs") + ", plot-grid " +
                    (same_grid ? "identical" : "differs");
    return {ok && same_chart && same_grid && nonempty, d};
}

}  // namespace

int main() {
    const std::vector<Vec3> pts = testing::random_unit_points(100000, 101);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"warp round trip, 1e5 points x 6 sigmas", [&] { return warp_round_trip(pts); }},
        {"sigma = 1 identity", [&] { return identity_at_one(pts); }},
        {"expanded rational oracle", [&] { return expanded_oracle(pts); }},
        {"circles map to circles, sigma = 0.3", circles_to_circles},
        {"conformality", conformality},
        {"spherical round trip, 1e5 points", spherical_round_trip},
        {"alt-mapping solver and closed-form theta", alt_mapping_solver},
        {"star-shapedness by ray counts", star_shapedness},
        {"cap-band demo becomes one cohesive chart", cap_band_demo},
        {"whole-sphere ROI is infeasible", whole_sphere},
        {"CLI byte determinism", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu  %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
