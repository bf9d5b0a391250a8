#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "earclip/geom.hpp"
#include "earclip/polygon.hpp"

namespace earclip {

struct Triangle {
    std::array<std::size_t, 3> v{};  ///< indices into the vertex table, CCW
    std::array<NodeId, 3> nodes{};   ///< ring node identities, same order as v
    bool degenerate = false;         ///< zero-area slit artifact from the fallback pass

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Index triangles over an immutable vertex table, plus an undirected edge map
/// keyed by node identity (bridge duplicates are distinct nodes that share a
/// vertex index, so vertex indices cannot key edges).
class Triangulation {
public:
    /// Up to two triangles on one undirected edge; -1 marks an empty slot.
    struct EdgeUse {
        std::array<std::int32_t, 2> tri{-1, -1};
        int count() const { return (tri[0] >= 0) + (tri[1] >= 0); }
    };

    Triangulation() = default;
    Triangulation(std::vector<Point2> vertex_table, std::vector<std::size_t> node_vertex);

    /// Builds the vertex table and node map from a freshly built ring.
    static Triangulation for_ring(const VertexRing& ring);

    const std::vector<Point2>& vertex_table() const { return vertex_table_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    std::size_t size() const { return triangles_.size(); }
    const Triangle& operator[](std::size_t i) const { return triangles_[i]; }

    const Point2& node_position(NodeId n) const { return vertex_table_[node_vertex_[n]]; }
    std::size_t node_vertex(NodeId n) const { return node_vertex_[n]; }
    std::size_t node_count() const { return node_vertex_.size(); }

    std::array<Point2, 3> corners(std::size_t t) const;

    /// Appends a triangle over three nodes. Throws std::logic_error when an
    /// edge would gain a third triangle.
    std::size_t add_triangle(NodeId a, NodeId b, NodeId c, bool degenerate = false);

    EdgeUse edge_use(NodeId a, NodeId b) const;

    /// The other triangle on edge (a, b) of triangle t, if any.
    std::optional<std::size_t> across(std::size_t t, NodeId a, NodeId b) const;

    /// Replaces two triangles in place, updating the edge map in one step.
    void replace_pair(std::size_t t1, const Triangle& n1, std::size_t t2, const Triangle& n2);

    std::size_t degenerate_count() const;

    /// Sum of signed triangle areas.
    double area() const;

    static std::uint64_t edge_key(NodeId a, NodeId b) {
        const NodeId lo = a < b ? a : b;
        const NodeId hi = a < b ? b : a;
        return (static_cast<std::uint64_t>(lo) << 32) | hi;
    }

private:
    void link(std::size_t t);
    void unlink(std::size_t t);

    std::vector<Point2> vertex_table_;
    std::vector<std::size_t> node_vertex_;
    std::vector<Triangle> triangles_;
    std::unordered_map<std::uint64_t, EdgeUse> edges_;
};

}  // namespace earclip
