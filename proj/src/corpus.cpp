#include "earclip/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "earclip/errors.hpp"

namespace earclip {

namespace {

constexpr double kRadius = 100.0;
constexpr double kClearance = 0.5;
constexpr std::size_t kMaxAttempts = 10000;

// Draws from the raw engine output so the sequence does not depend on the
// standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t integer(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(unit() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

// Star polygon around `center`, CCW. Angles blend sorted random samples with
// an even spacing, which keeps them strictly increasing.
Ring star(Sampler& rng, std::size_t n, Point2 center, double radius, double min_radius_ratio) {
    std::vector<double> samples(n);
    for (double& a : samples) {
        a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    std::sort(samples.begin(), samples.end());
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Ring ring;
    ring.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double even = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const double theta = phase + 0.5 * samples[k] + 0.5 * even;
        const double r = radius * rng.uniform(min_radius_ratio, 1.0);
        ring.points.push_back({center.x + r * std::cos(theta), center.y + r * std::sin(theta)});
    }
    return ring;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, {a.x + t * dx, a.y + t * dy});
}

// Every vertex of one ring keeps `gap` distance from every edge of the other.
bool separated(const Ring& a, const Ring& b, double gap) {
    auto one_way = [gap](const Ring& from, const Ring& to) {
        for (const Point2& p : from.points) {
            for (std::size_t k = 0; k < to.size(); ++k) {
                if (point_segment_distance(p, to.points[k], to.points[(k + 1) % to.size()]) < gap) {
                    return false;
                }
            }
        }
        return true;
    };
    return one_way(a, b) && one_way(b, a);
}

bool rings_cross(const Ring& a, const Ring& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (segments_properly_cross(a.points[i], a.points[(i + 1) % a.size()], b.points[j],
                                        b.points[(j + 1) % b.size()])) {
                return true;
            }
        }
    }
    return false;
}

PolygonWithHoles one_polygon(Sampler& rng, std::size_t n, std::size_t holes) {
    PolygonWithHoles poly;
    poly.outer = star(rng, n, {0.0, 0.0}, kRadius, 0.3);

    const std::size_t hole_max = std::max<std::size_t>(3, std::min<std::size_t>(n / 2, 24));
    for (std::size_t h = 0; h < holes; ++h) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            const std::size_t m = rng.integer(3, hole_max);
            const Point2 center{rng.uniform(-kRadius, kRadius), rng.uniform(-kRadius, kRadius)};
            const double size = kRadius * rng.uniform(0.04, 0.15);
            Ring hole = star(rng, m, center, size, 0.5);

            if (!std::all_of(hole.points.begin(), hole.points.end(),
                             [&](const Point2& p) { return point_in_ring(p, poly.outer.points); })) {
                continue;
            }
            if (rings_cross(hole, poly.outer) || !separated(hole, poly.outer, kClearance)) {
                continue;
            }
            const bool clashes = std::any_of(poly.holes.begin(), poly.holes.end(), [&](const Ring& other) {
                return rings_cross(hole, other) || !separated(hole, other, kClearance) ||
                       point_in_ring(other.points.front(), hole.points) ||
                       point_in_ring(hole.points.front(), other.points);
            });
            if (clashes) {
                continue;
            }
            poly.holes.push_back(reversed(hole));
            placed = true;
        }
        if (!placed) {
            throw GeometryError(ErrorKind::GenerationFailed,
                                fmt::format("could not place hole {} after {} attempts", h, kMaxAttempts));
        }
    }
    return normalize(poly);
}

std::size_t parse_count(std::string_view s) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument(fmt::format("bad range bound '{}'", s));
    }
    return value;
}

}  // namespace

Range parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::size_t v = parse_count(text);
        return {v, v};
    }
    Range r{parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
    if (r.min > r.max) {
        throw std::invalid_argument(fmt::format("range '{}' has min > max", text));
    }
    return r;
}

std::vector<PolygonWithHoles> generate_corpus(std::uint64_t seed, std::size_t count, Range vertex_range,
                                              Range holes_range) {
    if (count == 0) {
        throw std::invalid_argument("corpus count must be at least 1");
    }
    if (vertex_range.min < 4 || vertex_range.max > 10000 || vertex_range.min > vertex_range.max) {
        throw std::invalid_argument("vertex range must lie within [4, 10000]");
    }
    if (holes_range.min > holes_range.max) {
        throw std::invalid_argument("holes range has min > max");
    }
    Sampler rng(seed);
    std::vector<PolygonWithHoles> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = rng.integer(vertex_range.min, vertex_range.max);
        const std::size_t h = rng.integer(holes_range.min, holes_range.max);
        out.push_back(one_polygon(rng, n, h));
    }
    return out;
}

}  // namespace earclip
