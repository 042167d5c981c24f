#ifndef LCS_IO_HPP
#define LCS_IO_HPP

#include <string>
#include <variant>

#include "lcs/surface.hpp"

namespace lcs {

using SurfaceVariant = std::variant<ConeMetric, DecoratedMetric>;

// Structured-text surface format, JSON syntax:
//   version, genus, n, curvature ("decorated" | -1 | 0 | 1),
//   faces: [[3f, 3f+1, 3f+2], ...], gluing: [[faceA,sideA,faceB,sideB], ...],
//   vertex_of_corner: [...], values: {"edge_id": length_or_lambda}.
// Edge ids are the gluing rows in canonical sorted order.
std::string serialize_surface(const SurfaceVariant& m);
SurfaceVariant parse_surface(const std::string& text);

void write_surface(const std::string& path, const SurfaceVariant& m);
SurfaceVariant read_surface(const std::string& path);

} // namespace lcs

#endif
