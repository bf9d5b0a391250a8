#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "earclip/geom.hpp"

namespace earclip {

/// Closed ring of points; the closing edge is implicit (last != first).
struct Ring {
    std::vector<Point2> points;

    std::size_t size() const { return points.size(); }
    friend bool operator==(const Ring&, const Ring&) = default;
};

/// One outer ring plus holes. After `normalize` the outer ring is CCW and
/// every hole is CW.
struct PolygonWithHoles {
    Ring outer;
    std::vector<Ring> holes;

    friend bool operator==(const PolygonWithHoles&, const PolygonWithHoles&) = default;
};

/// Outer vertices first, then each hole's vertices in order. Output triangles
/// index into this table.
std::vector<Point2> vertex_table(const PolygonWithHoles& poly);
std::size_t vertex_count(const PolygonWithHoles& poly);

/// Throws InvalidRing when the ring has fewer than three points, coincident
/// consecutive points, or (near) zero area.
void check_ring(const Ring& ring, const Epsilon& eps = {});

Ring reversed(const Ring& ring);

/// Removes consecutive duplicates (including across the closing edge) and
/// orients the outer ring CCW and holes CW. Reversal keeps the first point in
/// place. A message is appended to `notices` for every ring that was changed.
PolygonWithHoles normalize(const PolygonWithHoles& poly, const Epsilon& eps = {},
                           std::vector<std::string>* notices = nullptr);

/// Even-odd ray casting. Points exactly on the boundary may go either way.
bool point_in_ring(const Point2& p, std::span<const Point2> ring);

/// Opt-in structural validation: every ring simple, holes strictly inside the
/// outer ring and pairwise disjoint. Returns an empty string when valid,
/// otherwise a description of the first problem found. O(n^2).
std::string validate(const PolygonWithHoles& poly, const Epsilon& eps = {});

using NodeId = std::uint32_t;

struct VertexNode {
    Point2 position;
    std::size_t original_index = 0;
    NodeId prev = 0;
    NodeId next = 0;
    double interior_angle = 0.0;
    bool is_convex = false;
    bool is_ear = false;
    bool alive = true;
};

/// Mutable doubly-linked ring consumed by ear clipping.
///
/// Nodes live in a flat array and are never reallocated, so a NodeId stays a
/// stable identity for the whole run. Node i is the i-th point of the ring
/// the VertexRing was built from.
class VertexRing {
public:
    VertexRing() = default;

    std::size_t size() const { return live_; }
    std::size_t capacity() const { return nodes_.size(); }
    NodeId head() const { return head_; }
    const Epsilon& eps() const { return eps_; }

    const VertexNode& operator[](NodeId id) const { return nodes_[id]; }
    VertexNode& operator[](NodeId id) { return nodes_[id]; }

    /// Unlinks `id`. Neighbour angles are left stale.
    void remove(NodeId id);

    /// Recomputes interior_angle and is_convex of one node from its current
    /// neighbours. Coincident neighbours are treated as a spike (360, reflex).
    void refresh_angle(NodeId id);

    /// Live nodes in ring order starting at head().
    std::vector<NodeId> live_nodes() const;
    std::vector<Point2> live_points() const;

    friend VertexRing build_ring(const Ring& ring, std::span<const std::size_t> original_index,
                                 const Epsilon& eps);

private:
    std::vector<VertexNode> nodes_;
    NodeId head_ = 0;
    std::size_t live_ = 0;
    Epsilon eps_;
};

/// Builds the ring with angles and convexity populated; ear flags are false.
/// `original_index` defaults to 0..n-1.
VertexRing build_ring(const Ring& ring, std::span<const std::size_t> original_index = {},
                      const Epsilon& eps = {});

/// Unlinks `v`. Throws std::logic_error when fewer than three live nodes
/// would remain.
void remove_vertex(VertexRing& ring, NodeId v);

}  // namespace earclip
