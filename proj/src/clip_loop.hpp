#pragma once

// Shared cutting loop behind the basic, traditional and improved
// triangulators. Selection is pluggable; everything else (cut, neighbour
// refresh, collinear fallback, final triangle) is common.

#include <optional>
#include <string>

#include <fmt/format.h>

#include "earclip/ear_clip.hpp"
#include "earclip/errors.hpp"
#include "earclip/kernels.hpp"

namespace earclip::detail {

inline void initialize_ears(VertexRing& ring, Execution exec) {
    if (exec == Execution::Parallel) {
        kernels::classify_ears_parallel(ring);
    } else {
        kernels::classify_ears_serial(ring);
    }
}

/// Smallest-angle ear; stale flags found during the re-check are cleared and
/// the scan repeats.
inline std::optional<NodeId> select_smallest(VertexRing& ring, NodeId start) {
    for (;;) {
        std::optional<NodeId> best;
        NodeId id = start;
        for (std::size_t k = 0; k < ring.size(); ++k, id = ring[id].next) {
            const VertexNode& v = ring[id];
            if (!v.is_ear) {
                continue;
            }
            if (!best) {
                best = id;
                continue;
            }
            const VertexNode& b = ring[*best];
            if (v.interior_angle < b.interior_angle ||
                (v.interior_angle == b.interior_angle && v.original_index < b.original_index)) {
                best = id;
            }
        }
        if (!best || is_ear(ring, *best)) {
            return best;
        }
        ring[*best].is_ear = false;
    }
}

/// First ear at or after `start` in ring order.
inline std::optional<NodeId> select_first(VertexRing& ring, NodeId start) {
    NodeId id = start;
    for (std::size_t k = 0; k < ring.size(); ++k, id = ring[id].next) {
        if (!ring[id].is_ear) {
            continue;
        }
        if (is_ear(ring, id)) {
            return id;
        }
        ring[id].is_ear = false;
    }
    return std::nullopt;
}

/// Fallback for rings with no ear left: a node whose triangle is collinear
/// (straight vertex, spike, or coincident neighbour) can be cut as a
/// zero-area triangle without changing the region.
inline std::optional<NodeId> select_collinear(const VertexRing& ring, NodeId start) {
    NodeId id = start;
    for (std::size_t k = 0; k < ring.size(); ++k, id = ring[id].next) {
        const VertexNode& v = ring[id];
        const Point2& a = ring[v.prev].position;
        const Point2& c = ring[v.next].position;
        if (orientation(a, v.position, c, ring.eps()) == Orientation::Collinear) {
            return id;
        }
    }
    return std::nullopt;
}

enum class Policy { Smallest, Sequential };

/// Runs the cutting loop. `on_triangle(tri, t)` is invoked after each
/// triangle is appended, before the next selection.
template <typename OnTriangle>
Triangulation clip(VertexRing& ring, Policy policy, Execution exec, OnTriangle&& on_triangle) {
    Triangulation tri = Triangulation::for_ring(ring);
    initialize_ears(ring, exec);

    NodeId cursor = ring.head();
    while (ring.size() > 3) {
        const NodeId start = policy == Policy::Sequential ? cursor : ring.head();
        std::optional<NodeId> ear =
            policy == Policy::Smallest ? select_smallest(ring, start) : select_first(ring, start);
        bool degenerate = false;
        if (!ear) {
            ear = select_collinear(ring, start);
            degenerate = true;
        }
        if (!ear) {
            throw EarSearchFailed(fmt::format("no ear found with {} vertices left", ring.size()),
                                  ring.live_points());
        }
        const NodeId v = *ear;
        const NodeId left = ring[v].prev;
        const NodeId right = ring[v].next;
        const std::size_t t = tri.add_triangle(left, v, right, degenerate);
        const bool left_was_reflex = !ring[left].is_convex;
        const bool right_was_reflex = !ring[right].is_convex;
        remove_vertex(ring, v);
        update_after_cut(ring, left, right);
        if (left_was_reflex && ring[left].is_convex) {
            refresh_unblocked(ring, left);
        }
        if (right_was_reflex && ring[right].is_convex) {
            refresh_unblocked(ring, right);
        }
        cursor = right;
        on_triangle(tri, t);
    }

    const NodeId last = policy == Policy::Sequential ? cursor : ring.head();
    const NodeId a = ring[last].prev;
    const NodeId c = ring[last].next;
    const bool flat =
        orientation(ring[a].position, ring[last].position, ring[c].position, ring.eps()) == Orientation::Collinear;
    const std::size_t t = tri.add_triangle(a, last, c, flat);
    on_triangle(tri, t);
    return tri;
}

}  // namespace earclip::detail
