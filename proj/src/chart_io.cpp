#include "polewarp/chart_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"
#include "polewarp/obj_io.hpp"

namespace polewarp {

namespace {

template <class Ids>
void write_id_list(std::ostream& out, const char* key, const Ids& ids) {
    out << key << '\t';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? " " : "") << ids[i];
    }
    out << '\n';
}

void write_vec(std::ostream& out, const Vec3& v) {
    out << format_g9(v.x) << ',' << format_g9(v.y) << ',' << format_g9(v.z);
}

}  // namespace

void write_chart_obj(const ParamChart& chart, std::ostream& out) {
    out << "# theta-phi chart: v phi theta 0 r\n";
    for (const auto& s : chart.coords) {
        out << "v " << format_g9(s.phi) << ' ' << format_g9(s.theta) << " 0 " << format_g9(s.r) << '\n';
    }
    for (const auto& t : chart.triangles) {
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
}

ParamChart read_chart_obj(std::istream& in) {
    ObjRecords rec = parse_obj_records(in);
    ParamChart chart;
    chart.coords.reserve(rec.positions.size());
    for (std::size_t i = 0; i < rec.positions.size(); ++i) {
        const Vec3& p = rec.positions[i];
        chart.coords.push_back({p.y, p.x, rec.weights[i].value_or(1.0)});
    }
    for (const auto& f : rec.faces) {
        for (std::size_t k = 1; k + 1 < f.size(); ++k) {
            chart.triangles.push_back({f[0], f[k], f[k + 1]});
        }
    }
    return chart;
}

ParamChart load_chart_obj(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    return read_chart_obj(in);
}

void write_diagnostics(const ParamChart& chart, const WarpFrame& frame, const RoiMask& roi,
                       std::ostream& out) {
    const auto& d = chart.diagnostics;
    const AxisAngle aa = frame.rotation.axis_angle();
    out << "vertices\t" << chart.coords.size() << '\n';
    out << "triangles\t" << chart.triangles.size() << '\n';
    out << "roi_triangles\t" << roi.size() << '\n';
    out << "center\t";
    write_vec(out, frame.translation);
    out << "\nrotate_axis\t";
    write_vec(out, aa.axis);
    out << "\nrotate_deg\t" << format_g9(aa.angle * 180.0 / kPi) << '\n';
    out << "sigma\t" << format_g9(frame.sigma.value()) << '\n';
    out << "cohesive\t" << (chart.cohesive() ? "true" : "false") << '\n';
    out << "seam_crossings\t" << d.seam_crossings.size() << '\n';
    write_id_list(out, "seam_edge_ids", d.seam_crossings);
    out << "singular_faces\t" << d.singular_faces.size() << '\n';
    write_id_list(out, "singular_face_ids", d.singular_faces);
    out << "distortion_min\t" << format_g9(d.distortion.min) << '\n';
    out << "distortion_max\t" << format_g9(d.distortion.max) << '\n';
    out << "distortion_mean\t" << format_g9(d.distortion.mean) << '\n';
    out << "degenerate_faces\t" << d.distortion.degenerate.size() << '\n';
    write_id_list(out, "degenerate_face_ids", d.distortion.degenerate);
    for (const auto& w : chart.warnings) {
        out << "warning\t" << w << '\n';
    }
}

RoiMask read_roi(std::istream& in, std::size_t num_triangles) {
    std::vector<std::uint32_t> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s(line);
        s = s.substr(0, s.find('#'));
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        const auto last = s.find_last_not_of(" \t\r");
        s = s.substr(first, last - first + 1);
        std::uint32_t id = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError(line_no, "expected a triangle id, got '" + std::string(s) + "'");
        }
        ids.push_back(id);
    }
    return RoiMask(std::move(ids), num_triangles);
}

RoiMask load_roi(const std::filesystem::path& path, std::size_t num_triangles) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    return read_roi(in, num_triangles);
}

void write_roi(const RoiMask& roi, std::ostream& out) {
    for (auto id : roi.ids()) {
        out << id << '\n';
    }
}

}  // namespace polewarp
