#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "polewarp/mesh.hpp"

namespace polewarp {

/// Raw records of a Wavefront OBJ subset: `v x y z [w]` and `f i j k ...`.
/// Face indices are resolved to 0-based; polygons are kept unsplit.
struct ObjRecords {
    std::vector<Vec3> positions;
    std::vector<std::optional<double>> weights;  ///< optional fourth `v` component
    std::vector<std::vector<std::uint32_t>> faces;
};

/// Parses `v` and `f` records. `vt`, `vn`, `vp`, grouping, smoothing and
/// material statements are skipped. Face corners may be `i`, `i/t`, `i//n` or
/// `i/t/n`; negative indices are relative to the vertices read so far.
/// Throws ParseError (with line number) on malformed records and
/// StructuralError on out-of-range indices.
ObjRecords parse_obj_records(std::istream& in);

/// Polygons with n > 3 corners become a fan (0, k, k+1) from the first corner.
TriMesh parse_obj(std::istream& in);
TriMesh load_obj(const std::filesystem::path& path);

/// Writes `v` and `f` records with 9 significant digits.
void write_obj(const TriMesh& mesh, std::ostream& out);
void save_obj(const TriMesh& mesh, const std::filesystem::path& path);

/// %.9g
std::string format_g9(double value);

}  // namespace polewarp
