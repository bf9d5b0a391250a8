#include "doctest.h"

#include <random>
#include <vector>

#include "earclip/bridge.hpp"
#include "earclip/corpus.hpp"
#include "earclip/ear_clip.hpp"
#include "earclip/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace earclip;

namespace {

using Tri = std::array<std::size_t, 3>;

std::vector<Tri> triples(const Triangulation& t) {
    std::vector<Tri> out;
    for (const auto& tr : t.triangles()) out.push_back(tr.v);
    return out;
}

VertexRing classified(const Ring& r) {
    auto ring = build_ring(r);
    for (NodeId id : ring.live_nodes()) ring[id].is_ear = is_ear(ring, id);
    return ring;
}

void check_simple(const PolygonWithHoles& poly, const Triangulation& tri) {
    const auto ring = eliminate_holes(poly);
    const auto m = oracle::check_mesh(poly, ring, tri);
    CHECK(m.triangles == m.expected_triangles);
    CHECK(m.area == doctest::Approx(m.expected_area).epsilon(1e-9));
    CHECK(m.bad_boundary_edges == 0);
    CHECK(m.bad_inner_edges == 0);
    CHECK(m.bad_centroids == 0);
    CHECK(m.bad_orientation == 0);
}

}  // namespace

TEST_CASE("dart: collinear vertex on the hypotenuse blocks the ear") {
    auto ring = classified(test::ring({{0, 0}, {4, 0}, {4, 4}, {1, 1}}));
    CHECK_FALSE(ring[3].is_convex);
    CHECK_FALSE(ring[1].is_ear);
    CHECK(ring[0].is_ear);
    CHECK(ring[2].is_ear);
}

TEST_CASE("L-shape notch blocks the far corner") {
    auto ring = classified(test::ring({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
    CHECK_FALSE(ring[3].is_ear);
    CHECK_FALSE(ring[0].is_ear);  // triangle (0,2),(0,0),(2,0) contains (1,1)
    CHECK(ring[1].is_ear);
    CHECK(ring[5].is_ear);
}

TEST_CASE("cutting an ear flips its reflex neighbour") {
    auto ring = classified(test::ring({{0, 0}, {4, 0}, {4, 4}, {2, 3}, {0, 4}}));
    REQUIRE_FALSE(ring[3].is_convex);
    REQUIRE(ring[4].is_ear);
    remove_vertex(ring, 4);
    update_after_cut(ring, 3, 0);
    CHECK(ring[3].is_convex);
    for (NodeId id : ring.live_nodes()) CHECK(ring[id].is_ear == oracle::ear(ring, id));
}

TEST_CASE("traditional on a convex hexagon is a fan") {
    std::vector<Point2> hex;
    for (int k = 0; k < 6; ++k) hex.push_back({std::cos(k * M_PI / 3), std::sin(k * M_PI / 3)});
    const auto t = triangulate_traditional(build_ring(Ring{hex}));
    CHECK(triples(t) == std::vector<Tri>{{5, 0, 1}, {5, 1, 2}, {5, 2, 3}, {5, 3, 4}});
}

TEST_CASE("basic cuts the sharpest ear first") {
    // (0,0) has the smallest interior angle of this quad
    const auto t = triangulate_basic(build_ring(test::ring({{0, 0}, {10, 1}, {9, 4}, {3, 3}})));
    REQUIRE(t.size() == 2);
    CHECK(t[0].v == Tri{3, 0, 1});
}

TEST_CASE("triangle input") {
    const auto t = triangulate_basic(build_ring(test::ring({{0, 0}, {1, 0}, {0, 1}})));
    REQUIRE(t.size() == 1);
    CHECK(t.area() == doctest::Approx(0.5));
}

TEST_CASE("fixtures triangulate into valid meshes") {
    for (const char* name : {"comb.txt", "spiral.txt"}) {
        INFO(name);
        const auto poly = test::fixture(name);
        const auto ring = eliminate_holes(poly);
        check_simple(poly, triangulate_basic(build_ring(ring.ring, ring.original_index)));
        check_simple(poly, triangulate_traditional(build_ring(ring.ring, ring.original_index)));
    }
}

TEST_CASE("square with a square hole") {
    PolygonWithHoles poly{test::ring({{0, 0}, {4, 0}, {4, 4}, {0, 4}}), {test::ring({{1, 1}, {1, 3}, {3, 3}, {3, 1}})}};
    const auto ring = eliminate_holes(poly);
    for (auto t : {triangulate_basic(build_ring(ring.ring, ring.original_index)),
                   triangulate_traditional(build_ring(ring.ring, ring.original_index))}) {
        CHECK(t.size() == 8);
        check_simple(poly, t);
        for (const auto& tr : t.triangles()) {
            for (auto v : tr.v) CHECK(v < 8);
        }
    }
}

TEST_CASE("ear flags match the oracle through whole runs") {
    const auto corpus = generate_corpus(11, 20, {8, 60}, {0, 2});
    std::mt19937_64 rng(5);
    std::size_t compared = 0;
    for (const auto& poly : corpus) {
        const auto dr = eliminate_holes(poly);
        auto ring = classified(dr.ring);
        while (ring.size() > 3) {
            for (NodeId id : ring.live_nodes()) {
                REQUIRE(ring[id].is_ear == oracle::ear(ring, id));
                ++compared;
            }
            std::vector<NodeId> ears;
            for (NodeId id : ring.live_nodes()) {
                if (ring[id].is_ear) ears.push_back(id);
            }
            if (ears.empty()) break;  // slit-only remainder, handled by the fallback pass
            const NodeId v = ears[std::uniform_int_distribution<std::size_t>(0, ears.size() - 1)(rng)];
            const NodeId l = ring[v].prev;
            const NodeId r = ring[v].next;
            const bool lr = !ring[l].is_convex;
            const bool rr = !ring[r].is_convex;
            remove_vertex(ring, v);
            update_after_cut(ring, l, r);
            if (lr && ring[l].is_convex) refresh_unblocked(ring, l);
            if (rr && ring[r].is_convex) refresh_unblocked(ring, r);
        }
    }
    CHECK(compared > 1000);
}
