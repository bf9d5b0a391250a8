#include "earclip/swap_opt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clip_loop.hpp"

namespace earclip {

AngleBound::AngleBound(double degrees) {
    if (std::isnan(degrees)) {
        throw std::invalid_argument("angle bound is NaN");
    }
    degrees_ = std::clamp(degrees, 0.0, 60.0);
    clamped_ = degrees_ != degrees;
}

namespace {

double pair_min(const std::array<Point2, 3>& a, const std::array<Point2, 3>& b) {
    return std::min(min_angle(a[0], a[1], a[2]), min_angle(b[0], b[1], b[2]));
}

// Orders three nodes counter-clockwise.
Triangle make_ccw(const Triangulation& tri, NodeId a, NodeId b, NodeId c) {
    if (cross(tri.node_position(a), tri.node_position(b), tri.node_position(c)) < 0.0) {
        std::swap(b, c);
    }
    Triangle out;
    out.nodes = {a, b, c};
    out.v = {tri.node_vertex(a), tri.node_vertex(b), tri.node_vertex(c)};
    return out;
}

}  // namespace

std::optional<std::size_t> find_neighbor_across_longest_edge(std::size_t t, const Triangulation& tri) {
    const Triangle& tr = tri[t];
    if (tr.degenerate) {
        return std::nullopt;
    }
    const auto c = tri.corners(t);
    const auto angles = triangle_angles(c[0], c[1], c[2]);
    int widest = 0;
    for (int i = 1; i < 3; ++i) {
        // angles are finite here; strict comparison keeps the lowest index on ties
        if (angles[i] > angles[widest]) {
            widest = i;
        }
    }
    return tri.across(t, tr.nodes[(widest + 1) % 3], tr.nodes[(widest + 2) % 3]);
}

SwapResult try_swap(std::size_t t1, std::size_t t2, Triangulation& tri) {
    const Triangle& a = tri[t1];
    const Triangle& b = tri[t2];

    int shared = 0;
    std::optional<NodeId> apex_a;
    for (NodeId n : a.nodes) {
        if (std::find(b.nodes.begin(), b.nodes.end(), n) != b.nodes.end()) {
            ++shared;
        } else {
            apex_a = n;
        }
    }
    if (t1 == t2 || shared != 2) {
        throw std::logic_error("try_swap: triangles do not share exactly one edge");
    }
    NodeId apex_b = 0;
    for (NodeId n : b.nodes) {
        if (std::find(a.nodes.begin(), a.nodes.end(), n) == a.nodes.end()) {
            apex_b = n;
        }
    }
    // a = (apex_a, s0, s1) in CCW order
    int k = 0;
    while (a.nodes[k] != *apex_a) {
        ++k;
    }
    const NodeId s0 = a.nodes[(k + 1) % 3];
    const NodeId s1 = a.nodes[(k + 2) % 3];

    SwapResult result{false, t1, t2, 0.0, 0.0};
    if (a.degenerate || b.degenerate) {
        return result;
    }

    const Point2& pa = tri.node_position(*apex_a);
    const Point2& pb = tri.node_position(apex_b);
    const Point2& q0 = tri.node_position(s0);
    const Point2& q1 = tri.node_position(s1);

    // Strictly convex quad: the new diagonal must separate s0 from s1 and
    // the old diagonal must separate the apexes.
    const Orientation side0 = orientation(pa, pb, q0);
    const Orientation side1 = orientation(pa, pb, q1);
    const Orientation apex_side_a = orientation(q0, q1, pa);
    const Orientation apex_side_b = orientation(q0, q1, pb);
    const bool convex = side0 != Orientation::Collinear && side1 != Orientation::Collinear && side0 != side1 &&
                        apex_side_a != Orientation::Collinear && apex_side_b != Orientation::Collinear &&
                        apex_side_a != apex_side_b;
    if (!convex) {
        return result;
    }

    result.min_before = pair_min(tri.corners(t1), tri.corners(t2));
    result.min_after = pair_min({pa, pb, q0}, {pa, pb, q1});
    if (!(result.min_after > result.min_before)) {
        return result;
    }

    const Triangle n1 = make_ccw(tri, *apex_a, s0, apex_b);
    const Triangle n2 = make_ccw(tri, *apex_a, apex_b, s1);
    tri.replace_pair(t1, n1, t2, n2);
    result.swapped = true;
    return result;
}

Triangulation triangulate_improved(VertexRing ring, AngleBound bound, Execution exec, SwapStats* stats) {
    SwapStats local;
    SwapStats& s = stats ? *stats : local;
    auto on_triangle = [&](Triangulation& tri, std::size_t t) {
        if (tri[t].degenerate) {
            return;
        }
        const auto c = tri.corners(t);
        if (!(min_angle(c[0], c[1], c[2]) < bound.degrees())) {
            return;
        }
        ++s.sharp;
        const auto neighbor = find_neighbor_across_longest_edge(t, tri);
        if (!neighbor) {
            ++s.no_neighbor;
            return;
        }
        const SwapResult r = try_swap(t, *neighbor, tri);
        if (r.swapped) {
            ++s.swapped;
            if (!(r.min_after > r.min_before)) {
                ++s.violations;
            }
        }
    };
    return detail::clip(ring, detail::Policy::Smallest, exec, on_triangle);
}

}  // namespace earclip
