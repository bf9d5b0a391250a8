#include "earclip/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace earclip {

Triangulation::Triangulation(std::vector<Point2> vertex_table, std::vector<std::size_t> node_vertex)
    : vertex_table_(std::move(vertex_table)), node_vertex_(std::move(node_vertex)) {}

Triangulation Triangulation::for_ring(const VertexRing& ring) {
    std::size_t table_size = 0;
    for (NodeId n = 0; n < ring.capacity(); ++n) {
        table_size = std::max(table_size, ring[n].original_index + 1);
    }
    std::vector<Point2> table(table_size);
    std::vector<std::size_t> node_vertex(ring.capacity());
    for (NodeId n = 0; n < ring.capacity(); ++n) {
        table[ring[n].original_index] = ring[n].position;
        node_vertex[n] = ring[n].original_index;
    }
    return Triangulation(std::move(table), std::move(node_vertex));
}

std::array<Point2, 3> Triangulation::corners(std::size_t t) const {
    const Triangle& tri = triangles_[t];
    return {vertex_table_[tri.v[0]], vertex_table_[tri.v[1]], vertex_table_[tri.v[2]]};
}

std::size_t Triangulation::add_triangle(NodeId a, NodeId b, NodeId c, bool degenerate) {
    Triangle tri;
    tri.nodes = {a, b, c};
    tri.v = {node_vertex_[a], node_vertex_[b], node_vertex_[c]};
    tri.degenerate = degenerate;
    triangles_.push_back(tri);
    link(triangles_.size() - 1);
    return triangles_.size() - 1;
}

Triangulation::EdgeUse Triangulation::edge_use(NodeId a, NodeId b) const {
    const auto it = edges_.find(edge_key(a, b));
    return it == edges_.end() ? EdgeUse{} : it->second;
}

std::optional<std::size_t> Triangulation::across(std::size_t t, NodeId a, NodeId b) const {
    const EdgeUse use = edge_use(a, b);
    for (std::int32_t id : use.tri) {
        if (id >= 0 && static_cast<std::size_t>(id) != t) {
            return static_cast<std::size_t>(id);
        }
    }
    return std::nullopt;
}

void Triangulation::link(std::size_t t) {
    const auto& n = triangles_[t].nodes;
    for (int i = 0; i < 3; ++i) {
        EdgeUse& use = edges_[edge_key(n[i], n[(i + 1) % 3])];
        if (use.tri[0] < 0) {
            use.tri[0] = static_cast<std::int32_t>(t);
        } else if (use.tri[1] < 0) {
            use.tri[1] = static_cast<std::int32_t>(t);
        } else {
            throw std::logic_error("edge shared by more than two triangles");
        }
    }
}

void Triangulation::unlink(std::size_t t) {
    const auto& n = triangles_[t].nodes;
    for (int i = 0; i < 3; ++i) {
        const auto key = edge_key(n[i], n[(i + 1) % 3]);
        EdgeUse& use = edges_.at(key);
        for (auto& slot : use.tri) {
            if (slot == static_cast<std::int32_t>(t)) {
                slot = -1;
            }
        }
        if (use.count() == 0) {
            edges_.erase(key);
        } else if (use.tri[0] < 0) {
            std::swap(use.tri[0], use.tri[1]);
        }
    }
}

void Triangulation::replace_pair(std::size_t t1, const Triangle& n1, std::size_t t2, const Triangle& n2) {
    unlink(t1);
    unlink(t2);
    triangles_[t1] = n1;
    triangles_[t2] = n2;
    link(t1);
    link(t2);
}

std::size_t Triangulation::degenerate_count() const {
    return static_cast<std::size_t>(
        std::count_if(triangles_.begin(), triangles_.end(), [](const Triangle& t) { return t.degenerate; }));
}

double Triangulation::area() const {
    double total = 0.0;
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const auto c = corners(t);
        total += 0.5 * cross(c[0], c[1], c[2]);
    }
    return total;
}

}  // namespace earclip
