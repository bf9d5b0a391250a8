#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "earclip/errors.hpp"
#include "earclip/polygon.hpp"

using namespace earclip;

namespace {

Ring square(double x0, double y0, double s) { return Ring{{{x0, y0}, {x0 + s, y0}, {x0 + s, y0 + s}, {x0, y0 + s}}}; }

}  // namespace

TEST_CASE("normalize orients and dedups") {
    PolygonWithHoles p;
    p.outer = Ring{{{0, 0}, {0, 4}, {4, 4}, {4, 4}, {4, 0}, {0, 0}}};
    p.holes.push_back(square(1, 1, 2));  // CCW, must become CW
    std::vector<std::string> notices;
    const auto n = normalize(p, {}, &notices);
    REQUIRE(n.outer.size() == 4);
    CHECK(n.outer.points.front() == Point2{0, 0});
    CHECK(signed_area(n.outer.points) == doctest::Approx(16.0));
    CHECK(signed_area(n.holes[0].points) == doctest::Approx(-4.0));
    CHECK(n.holes[0].points.front() == Point2{1, 1});
    CHECK(notices.size() == 3);

    std::vector<std::string> none;
    normalize(n, {}, &none);
    CHECK(none.empty());
}

TEST_CASE("vertex table order") {
    PolygonWithHoles p{square(0, 0, 4), {reversed(square(1, 1, 1))}};
    const auto t = vertex_table(p);
    REQUIRE(t.size() == 8);
    CHECK(vertex_count(p) == 8);
    CHECK(t[4] == Point2{1, 1});
    CHECK(t[5] == Point2{1, 2});
}

TEST_CASE("check ring") {
    CHECK_NOTHROW(check_ring(square(0, 0, 1)));
    CHECK_THROWS_AS(check_ring(Ring{{{0, 0}, {1, 0}}}), GeometryError);
    CHECK_THROWS_AS(check_ring(Ring{{{0, 0}, {1, 0}, {2, 0}}}), GeometryError);
    CHECK_THROWS_AS(check_ring(Ring{{{0, 0}, {0, 0}, {1, 1}, {0, 1}}}), GeometryError);
}

TEST_CASE("point in ring") {
    const auto s = square(0, 0, 2);
    CHECK(point_in_ring({1, 1}, s.points));
    CHECK_FALSE(point_in_ring({3, 1}, s.points));
    CHECK_FALSE(point_in_ring({-1, 1}, s.points));
}

TEST_CASE("validate") {
    PolygonWithHoles ok{square(0, 0, 10), {reversed(square(1, 1, 2)), reversed(square(5, 5, 2))}};
    CHECK(validate(ok).empty());

    PolygonWithHoles bowtie{Ring{{{0, 0}, {2, 2}, {2, 0}, {0, 2}}}, {}};
    CHECK_FALSE(validate(bowtie).empty());  // zero net area
    PolygonWithHoles crossed{Ring{{{0, 0}, {4, 0}, {4, 4}, {2, -1}, {0, 4}}}, {}};
    CHECK(validate(crossed).find("intersect") != std::string::npos);

    PolygonWithHoles outside{square(0, 0, 4), {reversed(square(6, 6, 1))}};
    CHECK(validate(outside).find("outside") != std::string::npos);

    PolygonWithHoles touching{square(0, 0, 4), {reversed(Ring{{{0, 1}, {2, 1}, {2, 2}}})}};
    CHECK(validate(touching).find("touches") != std::string::npos);

    PolygonWithHoles nested{square(0, 0, 10), {reversed(square(1, 1, 6)), reversed(square(2, 2, 1))}};
    CHECK_FALSE(validate(nested).empty());
}

TEST_CASE("vertex ring") {
    auto ring = build_ring(Ring{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}});
    CHECK(ring.size() == 6);
    CHECK(ring[3].interior_angle == doctest::Approx(270.0));
    CHECK_FALSE(ring[3].is_convex);
    CHECK(ring[0].is_convex);
    for (NodeId i = 0; i < 6; ++i) CHECK_FALSE(ring[i].is_ear);

    remove_vertex(ring, 0);
    CHECK(ring.size() == 5);
    CHECK_FALSE(ring[0].alive);
    CHECK(ring.head() == 1);
    CHECK(ring[5].next == 1);
    CHECK(ring[1].prev == 5);
    CHECK(ring.live_nodes() == std::vector<NodeId>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(remove_vertex(ring, 0), std::logic_error);

    remove_vertex(ring, 1);
    remove_vertex(ring, 2);
    CHECK(ring.size() == 3);
    CHECK_THROWS_AS(remove_vertex(ring, 3), std::logic_error);
}

TEST_CASE("vertex ring keeps original index") {
    const std::vector<std::size_t> idx{7, 8, 9};
    auto ring = build_ring(Ring{{{0, 0}, {1, 0}, {0, 1}}}, idx);
    CHECK(ring[2].original_index == 9);
    CHECK_THROWS(build_ring(Ring{{{0, 0}, {1, 0}}}));
}
