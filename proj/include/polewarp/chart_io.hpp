#pragma once

#include <filesystem>
#include <iosfwd>

#include "polewarp/pipeline.hpp"

namespace polewarp {

/// Chart as OBJ: one `v phi theta 0 r` record per vertex (the optional fourth
/// component carries the radius) followed by the mesh faces. Values use 9
/// significant digits.
void write_chart_obj(const ParamChart& chart, std::ostream& out);

/// Reads a chart OBJ. A missing fourth component means r = 1. Diagnostics are left empty.
ParamChart read_chart_obj(std::istream& in);
ParamChart load_chart_obj(const std::filesystem::path& path);

/// Line-oriented `key<TAB>value` report of a chart's diagnostics and frame.
void write_diagnostics(const ParamChart& chart, const WarpFrame& frame, const RoiMask& roi,
                       std::ostream& out);

/// One triangle id per line; `#` starts a comment. Throws ParseError on a bad
/// line and StructuralError on an id >= num_triangles.
RoiMask read_roi(std::istream& in, std::size_t num_triangles);
RoiMask load_roi(const std::filesystem::path& path, std::size_t num_triangles);
void write_roi(const RoiMask& roi, std::ostream& out);

}  // namespace polewarp
