#include "polewarp/obj_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "polewarp/errors.hpp"

namespace polewarp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

double parse_real(std::string_view tok, std::size_t line_no) {
    // from_chars for double is unavailable on older libstdc++; strtod needs a terminator.
    const std::string s(tok);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty()) {
        throw ParseError(line_no, "invalid number '" + s + "'");
    }
    return v;
}

long parse_index(std::string_view tok, std::size_t line_no) {
    const std::string_view head = tok.substr(0, tok.find('/'));
    long v = 0;
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), v);
    if (ec != std::errc() || ptr != head.data() + head.size() || v == 0) {
        throw ParseError(line_no, "invalid face index '" + std::string(tok) + "'");
    }
    return v;
}

bool is_ignored_keyword(std::string_view kw) {
    return kw == "vt" || kw == "vn" || kw == "vp" || kw == "g" || kw == "o" || kw == "s" ||
           kw == "usemtl" || kw == "mtllib" || kw == "l" || kw == "p";
}

}  // namespace

std::string format_g9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value == 0.0 ? 0.0 : value);
    return buf;
}

ObjRecords parse_obj_records(std::istream& in) {
    ObjRecords rec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const auto toks = split_ws(std::string_view(line).substr(0, hash));
        if (toks.empty()) {
            continue;
        }
        const std::string_view kw = toks[0];
        if (kw == "v") {
            if (toks.size() != 4 && toks.size() != 5) {
                throw ParseError(line_no, "vertex record needs 3 coordinates");
            }
            const Vec3 p{parse_real(toks[1], line_no), parse_real(toks[2], line_no),
                         parse_real(toks[3], line_no)};
            if (!is_finite(p)) {
                throw ParseError(line_no, "non-finite vertex coordinate");
            }
            rec.positions.push_back(p);
            rec.weights.push_back(toks.size() == 5 ? std::optional(parse_real(toks[4], line_no))
                                                   : std::nullopt);
        } else if (kw == "f") {
            if (toks.size() < 4) {
                throw ParseError(line_no, "face record needs at least 3 corners");
            }
            std::vector<std::uint32_t> face;
            const long n = static_cast<long>(rec.positions.size());
            for (std::size_t k = 1; k < toks.size(); ++k) {
                const long idx = parse_index(toks[k], line_no);
                const long resolved = idx > 0 ? idx - 1 : n + idx;
                if (resolved < 0 || resolved >= n) {
                    throw StructuralError("line " + std::to_string(line_no) + ": face index " +
                                          std::to_string(idx) + " out of range");
                }
                face.push_back(static_cast<std::uint32_t>(resolved));
            }
            rec.faces.push_back(std::move(face));
        } else if (!is_ignored_keyword(kw)) {
            throw ParseError(line_no, "unknown record '" + std::string(kw) + "'");
        }
    }
    return rec;
}

TriMesh parse_obj(std::istream& in) {
    ObjRecords rec = parse_obj_records(in);
    std::vector<Triangle> tris;
    tris.reserve(rec.faces.size());
    for (const auto& f : rec.faces) {
        for (std::size_t k = 1; k + 1 < f.size(); ++k) {
            tris.push_back({f[0], f[k], f[k + 1]});
        }
    }
    return TriMesh(std::move(rec.positions), std::move(tris));
}

TriMesh load_obj(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    return parse_obj(in);
}

void write_obj(const TriMesh& mesh, std::ostream& out) {
    for (const auto& v : mesh.vertices()) {
        out << "v " << format_g9(v.x) << ' ' << format_g9(v.y) << ' ' << format_g9(v.z) << '\n';
    }
    for (const auto& t : mesh.triangles()) {
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
}

void save_obj(const TriMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write_obj(mesh, out);
    if (!out) {
        throw Error("failed writing '" + path.string() + "'");
    }
}

}  // namespace polewarp
