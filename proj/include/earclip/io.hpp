#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "earclip/polygon.hpp"
#include "earclip/quality.hpp"
#include "earclip/triangulation.hpp"

namespace earclip {

enum class InputFormat { Text, GeoJson };

struct ParsedPolygon {
    PolygonWithHoles polygon;  ///< normalized
    std::vector<std::string> notices;
};

/// Parses and normalizes a polygon.
///
/// Text format: one ring per line, `ring x,y x,y ...`; the first ring is the
/// outer boundary, the rest are holes. Blank lines and `#` comments are
/// ignored. GeoJSON accepts a Polygon geometry or a Feature wrapping one.
/// Throws ParseError on malformed input.
ParsedPolygon parse_polygon(std::string_view text, InputFormat format = InputFormat::Text,
                            const Epsilon& eps = {});

/// Text format with shortest round-trip number formatting.
std::string serialize_polygon(const PolygonWithHoles& poly);

/// `{vertices, triangles, stats: {bins, average, count}, degenerate_count}`.
std::string to_json(const Triangulation& tri, const QualityReport& stats);

std::string to_obj(const Triangulation& tri);

/// Standalone SVG: filled triangles with light edges, then the polygon
/// outline (outer ring and holes) in one path.
std::string render_svg(const PolygonWithHoles& poly, const Triangulation& tri);

}  // namespace earclip
