#include "earclip/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "earclip/errors.hpp"

namespace earclip {

std::vector<Point2> vertex_table(const PolygonWithHoles& poly) {
    std::vector<Point2> table = poly.outer.points;
    for (const Ring& hole : poly.holes) {
        table.insert(table.end(), hole.points.begin(), hole.points.end());
    }
    return table;
}

std::size_t vertex_count(const PolygonWithHoles& poly) {
    std::size_t n = poly.outer.size();
    for (const Ring& hole : poly.holes) {
        n += hole.size();
    }
    return n;
}

void check_ring(const Ring& ring, const Epsilon& eps) {
    const auto& pts = ring.points;
    if (pts.size() < 3) {
        throw GeometryError(ErrorKind::InvalidRing, fmt::format("ring has {} points, needs at least 3", pts.size()));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
            throw GeometryError(ErrorKind::InvalidRing, fmt::format("point {} is not finite", i));
        }
        if (coincident(pts[i], pts[(i + 1) % pts.size()], eps)) {
            throw GeometryError(ErrorKind::InvalidRing, fmt::format("points {} and {} coincide", i, (i + 1) % pts.size()));
        }
    }
    if (std::abs(signed_area(pts)) <= eps.area) {
        throw GeometryError(ErrorKind::InvalidRing, "ring has zero area");
    }
}

Ring reversed(const Ring& ring) {
    Ring out;
    out.points.reserve(ring.size());
    if (ring.points.empty()) {
        return out;
    }
    out.points.push_back(ring.points.front());
    out.points.insert(out.points.end(), ring.points.rbegin(), ring.points.rend() - 1);
    return out;
}

namespace {

Ring dedup(const Ring& ring, const Epsilon& eps) {
    Ring out;
    for (const Point2& p : ring.points) {
        if (out.points.empty() || !coincident(out.points.back(), p, eps)) {
            out.points.push_back(p);
        }
    }
    while (out.points.size() > 1 && coincident(out.points.back(), out.points.front(), eps)) {
        out.points.pop_back();
    }
    return out;
}

Ring normalized_ring(const Ring& ring, bool want_ccw, const std::string& label, const Epsilon& eps,
                     std::vector<std::string>* notices) {
    Ring out = dedup(ring, eps);
    if (notices && out.size() != ring.size()) {
        notices->push_back(fmt::format("{}: removed {} duplicate point(s)", label, ring.size() - out.size()));
    }
    check_ring(out, eps);
    const bool ccw = signed_area(out.points) > 0.0;
    if (ccw != want_ccw) {
        out = reversed(out);
        if (notices) {
            notices->push_back(fmt::format("{}: reoriented to {}", label, want_ccw ? "CCW" : "CW"));
        }
    }
    return out;
}

}  // namespace

PolygonWithHoles normalize(const PolygonWithHoles& poly, const Epsilon& eps, std::vector<std::string>* notices) {
    PolygonWithHoles out;
    out.outer = normalized_ring(poly.outer, true, "outer ring", eps, notices);
    out.holes.reserve(poly.holes.size());
    for (std::size_t h = 0; h < poly.holes.size(); ++h) {
        out.holes.push_back(normalized_ring(poly.holes[h], false, fmt::format("hole {}", h), eps, notices));
    }
    return out;
}

bool point_in_ring(const Point2& p, std::span<const Point2> ring) {
    bool inside = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const Point2& a = ring[i];
        const Point2& b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) {
                inside = !inside;
            }
        }
    }
    return inside;
}

namespace {

bool rings_touch(const Ring& a, const Ring& b, const Epsilon& eps) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point2& a0 = a.points[i];
        const Point2& a1 = a.points[(i + 1) % a.size()];
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Point2& b0 = b.points[j];
            const Point2& b1 = b.points[(j + 1) % b.size()];
            if (segments_properly_cross(a0, a1, b0, b1, eps) || coincident(a0, b0, eps)) {
                return true;
            }
        }
    }
    return false;
}

std::string self_intersection(const Ring& ring, const Epsilon& eps) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            const Point2& a0 = ring.points[i];
            const Point2& a1 = ring.points[(i + 1) % n];
            const Point2& b0 = ring.points[j];
            const Point2& b1 = ring.points[(j + 1) % n];
            if (adjacent) {
                // Adjacent edges share one endpoint; only a fold-back overlaps.
                if (segments_properly_cross(a0, a1, b0, b1, eps) && n > 3) {
                    return fmt::format("edges {} and {} overlap", i, j);
                }
            } else if (segments_properly_cross(a0, a1, b0, b1, eps) || coincident(a0, b0, eps)) {
                return fmt::format("edges {} and {} intersect", i, j);
            }
        }
    }
    return {};
}

}  // namespace

std::string validate(const PolygonWithHoles& poly, const Epsilon& eps) {
    try {
        check_ring(poly.outer, eps);
        for (const Ring& hole : poly.holes) {
            check_ring(hole, eps);
        }
    } catch (const GeometryError& e) {
        return e.what();
    }
    if (auto why = self_intersection(poly.outer, eps); !why.empty()) {
        return "outer ring: " + why;
    }
    for (std::size_t h = 0; h < poly.holes.size(); ++h) {
        const Ring& hole = poly.holes[h];
        if (auto why = self_intersection(hole, eps); !why.empty()) {
            return fmt::format("hole {}: {}", h, why);
        }
        if (rings_touch(poly.outer, hole, eps)) {
            return fmt::format("hole {} touches the outer ring", h);
        }
        if (!point_in_ring(hole.points.front(), poly.outer.points)) {
            return fmt::format("hole {} is outside the outer ring", h);
        }
        for (std::size_t k = 0; k < h; ++k) {
            const Ring& other = poly.holes[k];
            if (rings_touch(other, hole, eps)) {
                return fmt::format("holes {} and {} touch", k, h);
            }
            if (point_in_ring(hole.points.front(), other.points) || point_in_ring(other.points.front(), hole.points)) {
                return fmt::format("holes {} and {} are nested", k, h);
            }
        }
    }
    return {};
}

void VertexRing::remove(NodeId id) {
    VertexNode& v = nodes_[id];
    nodes_[v.prev].next = v.next;
    nodes_[v.next].prev = v.prev;
    v.alive = false;
    v.is_ear = false;
    if (head_ == id) {
        head_ = v.next;
    }
    --live_;
}

void VertexRing::refresh_angle(NodeId id) {
    VertexNode& v = nodes_[id];
    const Point2& prev = nodes_[v.prev].position;
    const Point2& next = nodes_[v.next].position;
    if (coincident(prev, v.position, eps_) || coincident(v.position, next, eps_)) {
        v.interior_angle = 360.0;
        v.is_convex = false;
        return;
    }
    v.interior_angle = interior_angle(prev, v.position, next, eps_);
    v.is_convex = orientation(prev, v.position, next, eps_) == Orientation::Left;
}

std::vector<NodeId> VertexRing::live_nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_);
    if (live_ == 0) {
        return out;
    }
    NodeId id = head_;
    do {
        out.push_back(id);
        id = nodes_[id].next;
    } while (id != head_ && out.size() <= nodes_.size());
    return out;
}

std::vector<Point2> VertexRing::live_points() const {
    std::vector<Point2> out;
    for (NodeId id : live_nodes()) {
        out.push_back(nodes_[id].position);
    }
    return out;
}

VertexRing build_ring(const Ring& ring, std::span<const std::size_t> original_index, const Epsilon& eps) {
    const std::size_t n = ring.size();
    if (n < 3) {
        throw GeometryError(ErrorKind::InvalidRing, "ring needs at least 3 points");
    }
    if (!original_index.empty() && original_index.size() != n) {
        throw std::invalid_argument("original_index size does not match ring size");
    }
    VertexRing out;
    out.eps_ = eps;
    out.nodes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexNode& node = out.nodes_[i];
        node.position = ring.points[i];
        node.original_index = original_index.empty() ? i : original_index[i];
        node.prev = static_cast<NodeId>((i + n - 1) % n);
        node.next = static_cast<NodeId>((i + 1) % n);
    }
    out.live_ = n;
    out.head_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.refresh_angle(static_cast<NodeId>(i));
    }
    return out;
}

void remove_vertex(VertexRing& ring, NodeId v) {
    if (ring.size() <= 3 || !ring[v].alive) {
        throw std::logic_error("remove_vertex: ring would drop below 3 nodes or node is dead");
    }
    ring.remove(v);
}

}  // namespace earclip
