#include "earclip/kernels.hpp"

#include <cstdint>

#include "earclip/ear_clip.hpp"
#include "earclip/errors.hpp"

namespace earclip::kernels {

void classify_ears_serial(VertexRing& ring) {
    for (NodeId id = 0; id < ring.capacity(); ++id) {
        if (ring[id].alive) {
            ring[id].is_ear = is_ear(ring, id);
        }
    }
}

void classify_ears_parallel(VertexRing& ring) {
    const auto n = static_cast<std::int64_t>(ring.capacity());
    // Verdicts go to a side buffer: is_ear reads only convexity, never ear flags.
    std::vector<char> verdict(static_cast<std::size_t>(n), 0);
    const VertexRing& view = ring;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto id = static_cast<NodeId>(i);
        if (view[id].alive) {
            verdict[static_cast<std::size_t>(i)] = is_ear(view, id) ? 1 : 0;
        }
    }
    for (std::int64_t i = 0; i < n; ++i) {
        const auto id = static_cast<NodeId>(i);
        if (ring[id].alive) {
            ring[id].is_ear = verdict[static_cast<std::size_t>(i)] != 0;
        }
    }
}

namespace {

double triangle_min_angle(const Triangulation& tri, std::size_t t) {
    if (tri[t].degenerate) {
        return 0.0;
    }
    const auto c = tri.corners(t);
    try {
        return min_angle(c[0], c[1], c[2]);
    } catch (const GeometryError&) {
        return 0.0;
    }
}

}  // namespace

std::vector<double> min_angles_serial(const Triangulation& tri) {
    std::vector<double> out(tri.size());
    for (std::size_t t = 0; t < tri.size(); ++t) {
        out[t] = triangle_min_angle(tri, t);
    }
    return out;
}

std::vector<double> min_angles_parallel(const Triangulation& tri) {
    const auto n = static_cast<std::int64_t>(tri.size());
    std::vector<double> out(tri.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
        out[static_cast<std::size_t>(t)] = triangle_min_angle(tri, static_cast<std::size_t>(t));
    }
    return out;
}

}  // namespace earclip::kernels
