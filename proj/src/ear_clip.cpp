#include "earclip/ear_clip.hpp"

#include <array>

#include "clip_loop.hpp"

namespace earclip {

namespace {

// Direction corner -> t lies strictly inside the wedge of the CCW triangle at
// `corner`, between the rays towards `ccw_next` and `ccw_prev`. A ray along
// a side is the twin of a bridge edge and does not count.
bool in_corner_wedge(const Point2& corner, const Point2& ccw_next, const Point2& ccw_prev, const Point2& t,
                     const Epsilon& eps) {
    return orientation(corner, ccw_next, t, eps) == Orientation::Left &&
           orientation(corner, t, ccw_prev, eps) == Orientation::Left;
}

}  // namespace

bool is_ear(const VertexRing& ring, NodeId v) {
    const VertexNode& tip = ring[v];
    if (!tip.alive || !tip.is_convex) {
        return false;
    }
    const Epsilon& eps = ring.eps();
    const std::array<Point2, 3> tri = {ring[tip.prev].position, tip.position, ring[tip.next].position};
    for (NodeId id = 0; id < ring.capacity(); ++id) {
        const VertexNode& r = ring[id];
        if (!r.alive || id == v || id == tip.prev || id == tip.next) {
            continue;
        }
        // A bridge duplicate sitting on a corner blocks only if one of its
        // edges leaves the corner into the triangle.
        bool on_corner = false;
        for (int k = 0; k < 3; ++k) {
            if (!coincident(r.position, tri[k], eps)) {
                continue;
            }
            on_corner = true;
            const Point2& next = tri[(k + 1) % 3];
            const Point2& prev = tri[(k + 2) % 3];
            if (in_corner_wedge(tri[k], next, prev, ring[r.prev].position, eps) ||
                in_corner_wedge(tri[k], next, prev, ring[r.next].position, eps)) {
                return false;
            }
        }
        if (on_corner || r.is_convex) {
            continue;
        }
        if (point_in_triangle_closure(r.position, tri[0], tri[1], tri[2], eps)) {
            return false;
        }
    }
    return true;
}

void update_after_cut(VertexRing& ring, NodeId left, NodeId right) {
    ring.refresh_angle(left);
    ring.refresh_angle(right);
    ring[left].is_ear = is_ear(ring, left);
    ring[right].is_ear = is_ear(ring, right);
}

std::size_t refresh_unblocked(VertexRing& ring, NodeId flipped) {
    const Point2 blocker = ring[flipped].position;
    std::size_t gained = 0;
    for (NodeId id = 0; id < ring.capacity(); ++id) {
        VertexNode& x = ring[id];
        if (!x.alive || !x.is_convex || x.is_ear || id == flipped) {
            continue;
        }
        if (point_in_triangle_closure(blocker, ring[x.prev].position, x.position, ring[x.next].position,
                                      ring.eps()) &&
            is_ear(ring, id)) {
            x.is_ear = true;
            ++gained;
        }
    }
    return gained;
}

Triangulation triangulate_basic(VertexRing ring, Execution exec) {
    return detail::clip(ring, detail::Policy::Smallest, exec, [](const Triangulation&, std::size_t) {});
}

Triangulation triangulate_traditional(VertexRing ring, Execution exec) {
    return detail::clip(ring, detail::Policy::Sequential, exec, [](const Triangulation&, std::size_t) {});
}

}  // namespace earclip
