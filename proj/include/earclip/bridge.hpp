#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "earclip/polygon.hpp"

namespace earclip {

struct RingVertex {
    std::size_t ring = 0;   ///< 0 = the ring being grown, h + 1 = hole h
    std::size_t index = 0;  ///< position within that ring at selection time

    friend bool operator==(const RingVertex&, const RingVertex&) = default;
};

struct BridgeEdge {
    RingVertex outer_vertex;
    RingVertex hole_vertex;
    double length = 0.0;
};

/// Ring plus the vertex-table index of every point.
struct IndexedRing {
    Ring ring;
    std::vector<std::size_t> original_index;
};

/// Single CCW ring produced by bridging every hole into the outer ring.
/// Bridge endpoints appear twice; duplicates share their original_index.
struct DegenerateRing {
    Ring ring;
    std::vector<std::size_t> original_index;
    std::vector<BridgeEdge> bridges;
    /// Bridge segments in merge order, as coordinates.
    std::vector<std::array<Point2, 2>> bridge_segments;
};

/// True when the segment from current[i] to hole[j] is usable as a bridge:
/// non-zero length, leaving both endpoints into the polygon interior, and not
/// crossing or touching any edge of `current`, `hole` or `obstacles` except at
/// its own endpoints.
bool is_valid_bridge(const Ring& current, const Ring& hole, std::span<const Ring> obstacles, std::size_t i,
                     std::size_t j, const Epsilon& eps = {});

/// Shortest valid bridge between `current` (CCW) and `hole` (CW). Ties go to
/// the smaller outer index, then the smaller hole index. Throws NoValidBridge
/// when none of the m x n candidates is valid.
BridgeEdge find_bridge(const Ring& current, const Ring& hole, std::span<const Ring> obstacles,
                       const Epsilon& eps = {});

/// Splices the hole into `current` at the bridge: the bridge's outer and hole
/// vertices each appear twice, giving m + n + 2 points.
IndexedRing merge_hole(const IndexedRing& current, const IndexedRing& hole, const BridgeEdge& bridge);
Ring merge_hole(const Ring& current, const Ring& hole, const BridgeEdge& bridge);

/// Merges holes one at a time in input order; unmerged holes act as
/// obstacles. A hole without a valid bridge is retried after the others.
/// `poly` must be normalized.
DegenerateRing eliminate_holes(const PolygonWithHoles& poly, const Epsilon& eps = {});

}  // namespace earclip
