#pragma once

#include <array>
#include <span>

namespace earclip {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Tolerances for every floating-point predicate in the library.
///
/// `area` is an absolute bound on the cross product (twice the signed
/// triangle area) below which three points count as collinear. `len` is the
/// distance below which two points count as coincident. Both are absolute, so
/// inputs are expected to live in roughly the 1..1e3 coordinate range.
struct Epsilon {
    double area = 1e-12;
    double len = 1e-9;
};

enum class Orientation { Left, Right, Collinear };

/// (b - a) x (c - a).
inline double cross(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double distance(const Point2& a, const Point2& b);

bool coincident(const Point2& a, const Point2& b, const Epsilon& eps = {});

Orientation orientation(const Point2& a, const Point2& b, const Point2& c, const Epsilon& eps = {});

/// Shoelace area, positive for counter-clockwise rings. Throws InvalidRing
/// for fewer than three points.
double signed_area(std::span<const Point2> ring);

/// Interior angle at `v` in degrees for a counter-clockwise ring, in (0, 360].
///
/// Collinear triples are snapped: a straight vertex gives exactly 180 and a
/// spike (prev and next on the same side of v) gives 360, so that
/// `angle < 180` agrees with `orientation(prev, v, next) == Left`.
/// Throws DegenerateVertex when v coincides with a neighbour.
double interior_angle(const Point2& prev, const Point2& v, const Point2& next, const Epsilon& eps = {});

/// True when p lies inside the triangle or on its boundary.
bool point_in_triangle_closure(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                               const Epsilon& eps = {});

/// True when the closed segments share any point other than a common
/// endpoint. Collinear overlap, an X crossing, and an endpoint resting in the
/// other segment's interior all count as crossings.
bool segments_properly_cross(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2,
                             const Epsilon& eps = {});

/// Angles in degrees at a, b and c. Throws DegenerateTriangle when the
/// triangle has (near) zero area.
std::array<double, 3> triangle_angles(const Point2& a, const Point2& b, const Point2& c,
                                      const Epsilon& eps = {});

double min_angle(const Point2& a, const Point2& b, const Point2& c, const Epsilon& eps = {});

}  // namespace earclip
