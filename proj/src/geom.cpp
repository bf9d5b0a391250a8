#include "earclip/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "earclip/errors.hpp"

namespace earclip {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double dot(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

// r is collinear with a-b and lies within the segment's bounding box.
bool on_segment(const Point2& r, const Point2& a, const Point2& b, const Epsilon& eps) {
    if (orientation(a, b, r, eps) != Orientation::Collinear) {
        return false;
    }
    return r.x >= std::min(a.x, b.x) - eps.len && r.x <= std::max(a.x, b.x) + eps.len &&
           r.y >= std::min(a.y, b.y) - eps.len && r.y <= std::max(a.y, b.y) + eps.len;
}

}  // namespace

double distance(const Point2& a, const Point2& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

bool coincident(const Point2& a, const Point2& b, const Epsilon& eps) {
    return distance(a, b) <= eps.len;
}

Orientation orientation(const Point2& a, const Point2& b, const Point2& c, const Epsilon& eps) {
    const double z = cross(a, b, c);
    if (std::abs(z) <= eps.area) {
        return Orientation::Collinear;
    }
    return z > 0.0 ? Orientation::Left : Orientation::Right;
}

double signed_area(std::span<const Point2> ring) {
    if (ring.size() < 3) {
        throw GeometryError(ErrorKind::InvalidRing, "ring needs at least 3 points");
    }
    double twice = 0.0;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        twice += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
    }
    return 0.5 * twice;
}

double interior_angle(const Point2& prev, const Point2& v, const Point2& next, const Epsilon& eps) {
    if (coincident(prev, v, eps) || coincident(v, next, eps)) {
        throw GeometryError(ErrorKind::DegenerateVertex, "vertex coincides with a neighbour");
    }
    const double z = cross(v, next, prev);
    const double d = dot(v, next, prev);
    if (std::abs(z) <= eps.area) {
        return d < 0.0 ? 180.0 : 360.0;
    }
    double angle = std::atan2(z, d) * kRadToDeg;
    if (angle < 0.0) {
        angle += 360.0;
    }
    return angle;
}

bool point_in_triangle_closure(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                               const Epsilon& eps) {
    const Orientation o1 = orientation(a, b, p, eps);
    const Orientation o2 = orientation(b, c, p, eps);
    const Orientation o3 = orientation(c, a, p, eps);
    const bool has_left = o1 == Orientation::Left || o2 == Orientation::Left || o3 == Orientation::Left;
    const bool has_right = o1 == Orientation::Right || o2 == Orientation::Right || o3 == Orientation::Right;
    return !(has_left && has_right);
}

bool segments_properly_cross(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2,
                             const Epsilon& eps) {
    const bool s11 = coincident(p1, q1, eps);
    const bool s12 = coincident(p1, q2, eps);
    const bool s21 = coincident(p2, q1, eps);
    const bool s22 = coincident(p2, q2, eps);

    if ((s11 && s22) || (s12 && s21)) {
        return true;  // same segment
    }
    if (s11 || s12 || s21 || s22) {
        // One shared endpoint: the segments meet elsewhere only if they run
        // along the same ray out of it.
        const Point2& shared = (s11 || s12) ? p1 : p2;
        const Point2& p_other = (s11 || s12) ? p2 : p1;
        const Point2& q_other = (s11 || s21) ? q2 : q1;
        return orientation(shared, p_other, q_other, eps) == Orientation::Collinear &&
               dot(shared, p_other, q_other) > 0.0;
    }

    const Orientation o1 = orientation(p1, p2, q1, eps);
    const Orientation o2 = orientation(p1, p2, q2, eps);
    const Orientation o3 = orientation(q1, q2, p1, eps);
    const Orientation o4 = orientation(q1, q2, p2, eps);

    const bool strict_p = o1 != Orientation::Collinear && o2 != Orientation::Collinear && o1 != o2;
    const bool strict_q = o3 != Orientation::Collinear && o4 != Orientation::Collinear && o3 != o4;
    if (strict_p && strict_q) {
        return true;
    }
    return on_segment(q1, p1, p2, eps) || on_segment(q2, p1, p2, eps) || on_segment(p1, q1, q2, eps) ||
           on_segment(p2, q1, q2, eps);
}

std::array<double, 3> triangle_angles(const Point2& a, const Point2& b, const Point2& c, const Epsilon& eps) {
    const double z = std::abs(cross(a, b, c));
    if (z <= eps.area) {
        throw GeometryError(ErrorKind::DegenerateTriangle, "triangle has zero area");
    }
    return {
        std::atan2(z, dot(a, b, c)) * kRadToDeg,
        std::atan2(z, dot(b, c, a)) * kRadToDeg,
        std::atan2(z, dot(c, a, b)) * kRadToDeg,
    };
}

double min_angle(const Point2& a, const Point2& b, const Point2& c, const Epsilon& eps) {
    const auto angles = triangle_angles(a, b, c, eps);
    return std::min({angles[0], angles[1], angles[2]});
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidRing: return "InvalidRing";
        case ErrorKind::DegenerateVertex: return "DegenerateVertex";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::EarSearchFailed: return "EarSearchFailed";
        case ErrorKind::NoValidBridge: return "NoValidBridge";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
    }
    return "Unknown";
}

}  // namespace earclip
