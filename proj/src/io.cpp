#include "earclip/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "earclip/errors.hpp"

namespace earclip {

namespace {

double parse_number(std::string_view token, std::size_t line) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, fmt::format("bad number '{}'", token));
    }
    if (!std::isfinite(value)) {
        throw ParseError(line, fmt::format("non-finite coordinate '{}'", token));
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

struct RawRing {
    Ring ring;
    std::size_t line;
};

std::vector<RawRing> parse_text_rings(std::string_view text) {
    std::vector<RawRing> rings;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] != "ring") {
            throw ParseError(line_no, fmt::format("expected 'ring', got '{}'", tokens[0]));
        }
        RawRing raw{{}, line_no};
        for (std::size_t k = 1; k < tokens.size(); ++k) {
            const auto comma = tokens[k].find(',');
            if (comma == std::string_view::npos) {
                throw ParseError(line_no, fmt::format("expected x,y but got '{}'", tokens[k]));
            }
            raw.ring.points.push_back(
                {parse_number(tokens[k].substr(0, comma), line_no), parse_number(tokens[k].substr(comma + 1), line_no)});
        }
        if (raw.ring.size() < 3) {
            throw ParseError(line_no, fmt::format("ring has {} vertices, needs at least 3", raw.ring.size()));
        }
        rings.push_back(std::move(raw));
    }
    if (rings.empty()) {
        throw ParseError(1, "no rings found");
    }
    return rings;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::vector<RawRing> parse_geojson_rings(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    const nlohmann::json* geom = &doc;
    if (doc.is_object() && doc.value("type", "") == "Feature") {
        if (!doc.contains("geometry")) {
            throw ParseError(1, "Feature has no geometry");
        }
        geom = &doc["geometry"];
    }
    if (!geom->is_object() || geom->value("type", "") != "Polygon" || !geom->contains("coordinates") ||
        !(*geom)["coordinates"].is_array()) {
        throw ParseError(1, "expected a GeoJSON Polygon");
    }
    std::vector<RawRing> rings;
    for (const auto& jring : (*geom)["coordinates"]) {
        if (!jring.is_array()) {
            throw ParseError(1, "ring is not an array");
        }
        RawRing raw{{}, 1};
        for (const auto& jp : jring) {
            if (!jp.is_array() || jp.size() < 2 || !jp[0].is_number() || !jp[1].is_number()) {
                throw ParseError(1, "position must be [x, y]");
            }
            const Point2 p{jp[0].get<double>(), jp[1].get<double>()};
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw ParseError(1, "non-finite coordinate");
            }
            raw.ring.points.push_back(p);
        }
        // GeoJSON repeats the first position at the end.
        if (raw.ring.size() > 1 && raw.ring.points.front() == raw.ring.points.back()) {
            raw.ring.points.pop_back();
        }
        if (raw.ring.size() < 3) {
            throw ParseError(1, fmt::format("ring {} has {} vertices, needs at least 3", rings.size(), raw.ring.size()));
        }
        rings.push_back(std::move(raw));
    }
    if (rings.empty()) {
        throw ParseError(1, "polygon has no rings");
    }
    return rings;
}

}  // namespace

ParsedPolygon parse_polygon(std::string_view text, InputFormat format, const Epsilon& eps) {
    std::vector<RawRing> rings = format == InputFormat::Text ? parse_text_rings(text) : parse_geojson_rings(text);
    PolygonWithHoles raw;
    raw.outer = rings.front().ring;
    for (std::size_t k = 1; k < rings.size(); ++k) {
        raw.holes.push_back(rings[k].ring);
    }
    // Normalize ring by ring so a collapse can be reported at its line.
    ParsedPolygon out;
    for (std::size_t k = 0; k < rings.size(); ++k) {
        PolygonWithHoles single{rings[k].ring, {}};
        try {
            normalize(single, eps);
        } catch (const GeometryError& e) {
            throw ParseError(rings[k].line, e.what());
        }
    }
    out.polygon = normalize(raw, eps, &out.notices);
    return out;
}

std::string serialize_polygon(const PolygonWithHoles& poly) {
    std::string out;
    auto emit = [&out](const Ring& ring) {
        out += "ring";
        for (const Point2& p : ring.points) {
            out += fmt::format(" {},{}", p.x, p.y);
        }
        out += '\n';
    };
    emit(poly.outer);
    for (const Ring& hole : poly.holes) {
        emit(hole);
    }
    return out;
}

std::string to_json(const Triangulation& tri, const QualityReport& stats) {
    nlohmann::ordered_json doc;
    auto vertices = nlohmann::ordered_json::array();
    for (const Point2& p : tri.vertex_table()) {
        vertices.push_back({p.x, p.y});
    }
    auto triangles = nlohmann::ordered_json::array();
    for (const Triangle& t : tri.triangles()) {
        triangles.push_back({t.v[0], t.v[1], t.v[2]});
    }
    doc["vertices"] = std::move(vertices);
    doc["triangles"] = std::move(triangles);
    doc["stats"] = {
        {"bins", {stats.bin_fractions[0], stats.bin_fractions[1], stats.bin_fractions[2], stats.bin_fractions[3]}},
        {"average", stats.average_min_angle},
        {"count", stats.triangle_count},
    };
    doc["degenerate_count"] = tri.degenerate_count();
    return doc.dump() + "\n";
}

std::string to_obj(const Triangulation& tri) {
    std::string out = "# earclip triangulation\n";
    for (const Point2& p : tri.vertex_table()) {
        out += fmt::format("v {} {} 0\n", p.x, p.y);
    }
    for (const Triangle& t : tri.triangles()) {
        out += fmt::format("f {} {} {}\n", t.v[0] + 1, t.v[1] + 1, t.v[2] + 1);
    }
    return out;
}

std::string render_svg(const PolygonWithHoles& poly, const Triangulation& tri) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const Point2& p : poly.outer.points) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const double margin = 0.05 * (extent > 0.0 ? extent : 1.0);
    const double stroke = extent > 0.0 ? extent / 500.0 : 0.002;

    // SVG's y axis points down, so every y is negated.
    auto pt = [](const Point2& p) { return fmt::format("{:.6f},{:.6f}", p.x, -p.y); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6f} {:.6f} {:.6f} {:.6f}\">\n", min_x - margin,
        -max_y - margin, (max_x - min_x) + 2 * margin, (max_y - min_y) + 2 * margin);
    out += fmt::format("<g class=\"triangles\" fill=\"#d8e6f5\" stroke=\"#8fb0d0\" stroke-width=\"{:.6f}\">\n",
                       stroke * 0.5);
    for (std::size_t t = 0; t < tri.size(); ++t) {
        const auto c = tri.corners(t);
        out += fmt::format("<path class=\"tri\" d=\"M{} L{} L{} Z\"/>\n", pt(c[0]), pt(c[1]), pt(c[2]));
    }
    out += "</g>\n";

    std::string d;
    auto ring_path = [&](const Ring& ring) {
        for (std::size_t k = 0; k < ring.size(); ++k) {
            d += (k == 0 ? "M" : " L") + pt(ring.points[k]);
        }
        d += " Z ";
    };
    ring_path(poly.outer);
    for (const Ring& hole : poly.holes) {
        ring_path(hole);
    }
    d.pop_back();
    out += fmt::format(
        "<path class=\"outline\" fill=\"none\" stroke=\"#1f3a5f\" stroke-width=\"{:.6f}\" d=\"{}\"/>\n", stroke, d);
    out += "</svg>\n";
    return out;
}

}  // namespace earclip
