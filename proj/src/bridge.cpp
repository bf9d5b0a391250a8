#include "earclip/bridge.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <fmt/format.h>

#include "earclip/errors.hpp"

namespace earclip {

namespace {

// Direction v -> target points strictly into the interior sector at v,
// where the interior lies to the left of prev -> v -> next.
bool locally_inside(const Point2& prev, const Point2& v, const Point2& next, const Point2& target,
                    const Epsilon& eps) {
    const bool left_of_next = orientation(v, next, target, eps) == Orientation::Left;
    const bool left_of_prev = orientation(v, target, prev, eps) == Orientation::Left;
    if (orientation(prev, v, next, eps) == Orientation::Left) {
        return left_of_next && left_of_prev;
    }
    return left_of_next || left_of_prev;
}

bool crosses_ring(const Point2& a, const Point2& b, const Ring& ring, const Epsilon& eps) {
    const auto& pts = ring.points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (segments_properly_cross(a, b, pts[k], pts[(k + 1) % pts.size()], eps)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_valid_bridge(const Ring& current, const Ring& hole, std::span<const Ring> obstacles, std::size_t i,
                     std::size_t j, const Epsilon& eps) {
    const auto& cp = current.points;
    const auto& hp = hole.points;
    const Point2& p = cp[i];
    const Point2& h = hp[j];
    if (coincident(p, h, eps)) {
        return false;
    }
    if (!locally_inside(cp[(i + cp.size() - 1) % cp.size()], p, cp[(i + 1) % cp.size()], h, eps) ||
        !locally_inside(hp[(j + hp.size() - 1) % hp.size()], h, hp[(j + 1) % hp.size()], p, eps)) {
        return false;
    }
    if (crosses_ring(p, h, current, eps) || crosses_ring(p, h, hole, eps)) {
        return false;
    }
    return std::none_of(obstacles.begin(), obstacles.end(),
                        [&](const Ring& r) { return crosses_ring(p, h, r, eps); });
}

BridgeEdge find_bridge(const Ring& current, const Ring& hole, std::span<const Ring> obstacles, const Epsilon& eps) {
    struct Candidate {
        double length;
        std::size_t i;
        std::size_t j;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(current.size() * hole.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = 0; j < hole.size(); ++j) {
            candidates.push_back({distance(current.points[i], hole.points[j]), i, j});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.length != b.length) {
            return a.length < b.length;
        }
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const Candidate& c : candidates) {
        if (is_valid_bridge(current, hole, obstacles, c.i, c.j, eps)) {
            return BridgeEdge{{0, c.i}, {1, c.j}, c.length};
        }
    }
    throw NoValidBridge(fmt::format("no valid bridge among {} candidates", candidates.size()), current.points,
                        hole.points);
}

IndexedRing merge_hole(const IndexedRing& current, const IndexedRing& hole, const BridgeEdge& bridge) {
    const std::size_t i = bridge.outer_vertex.index;
    const std::size_t j = bridge.hole_vertex.index;
    const std::size_t m = current.ring.size();
    const std::size_t n = hole.ring.size();

    IndexedRing out;
    out.ring.points.reserve(m + n + 2);
    out.original_index.reserve(m + n + 2);
    auto push = [&out](const IndexedRing& src, std::size_t k) {
        out.ring.points.push_back(src.ring.points[k]);
        out.original_index.push_back(src.original_index[k]);
    };
    for (std::size_t k = 0; k <= i; ++k) {
        push(current, k);
    }
    for (std::size_t k = 0; k <= n; ++k) {
        push(hole, (j + k) % n);
    }
    push(current, i);
    for (std::size_t k = i + 1; k < m; ++k) {
        push(current, k);
    }
    return out;
}

Ring merge_hole(const Ring& current, const Ring& hole, const BridgeEdge& bridge) {
    IndexedRing c{current, std::vector<std::size_t>(current.size())};
    IndexedRing h{hole, std::vector<std::size_t>(hole.size())};
    return merge_hole(c, h, bridge).ring;
}

DegenerateRing eliminate_holes(const PolygonWithHoles& poly, const Epsilon& eps) {
    IndexedRing current{poly.outer, std::vector<std::size_t>(poly.outer.size())};
    std::iota(current.original_index.begin(), current.original_index.end(), std::size_t{0});

    std::vector<std::size_t> offset(poly.holes.size());
    std::size_t next_offset = poly.outer.size();
    for (std::size_t h = 0; h < poly.holes.size(); ++h) {
        offset[h] = next_offset;
        next_offset += poly.holes[h].size();
    }

    DegenerateRing out;
    std::deque<std::size_t> pending(poly.holes.size());
    std::iota(pending.begin(), pending.end(), std::size_t{0});
    std::size_t failures_in_a_row = 0;

    while (!pending.empty()) {
        const std::size_t h = pending.front();
        pending.pop_front();

        std::vector<Ring> obstacles;
        obstacles.reserve(pending.size());
        for (std::size_t other : pending) {
            obstacles.push_back(poly.holes[other]);
        }

        BridgeEdge bridge;
        try {
            bridge = find_bridge(current.ring, poly.holes[h], obstacles, eps);
        } catch (const NoValidBridge&) {
            // Another hole may be shielding this one; retry it once the rest are merged.
            if (++failures_in_a_row > pending.size()) {
                throw;
            }
            pending.push_back(h);
            continue;
        }
        failures_in_a_row = 0;
        bridge.hole_vertex.ring = h + 1;

        IndexedRing hole{poly.holes[h], std::vector<std::size_t>(poly.holes[h].size())};
        std::iota(hole.original_index.begin(), hole.original_index.end(), offset[h]);

        out.bridges.push_back(bridge);
        out.bridge_segments.push_back(
            {current.ring.points[bridge.outer_vertex.index], hole.ring.points[bridge.hole_vertex.index]});
        current = merge_hole(current, hole, bridge);
    }

    out.ring = std::move(current.ring);
    out.original_index = std::move(current.original_index);
    return out;
}

}  // namespace earclip
