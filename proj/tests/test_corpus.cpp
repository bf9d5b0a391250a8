#include "doctest.h"

#include <stdexcept>

#include "earclip/corpus.hpp"
#include "earclip/errors.hpp"
#include "earclip/pipeline.hpp"

using namespace earclip;

TEST_CASE("ranges") {
    CHECK(parse_range("4..200").min == 4);
    CHECK(parse_range("4..200").max == 200);
    CHECK(parse_range("7").min == 7);
    CHECK(parse_range("7").max == 7);
    CHECK_THROWS_AS(parse_range("9..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
}

TEST_CASE("corpus is valid and seeded") {
    const auto a = generate_corpus(5, 30, {4, 120}, {0, 3});
    REQUIRE(a.size() == 30);
    std::size_t holes = 0;
    for (const auto& p : a) {
        CHECK(p.outer.size() >= 4);
        CHECK(p.outer.size() <= 120);
        CHECK(p.holes.size() <= 3);
        CHECK(validate(p).empty());
        CHECK(signed_area(p.outer.points) > 0);
        for (const auto& h : p.holes) CHECK(signed_area(h.points) < 0);
        holes += p.holes.size();
    }
    CHECK(holes > 0);
    CHECK(generate_corpus(5, 30, {4, 120}, {0, 3}) == a);
    CHECK_FALSE(generate_corpus(6, 30, {4, 120}, {0, 3}) == a);
}

TEST_CASE("corpus argument checks") {
    CHECK_THROWS_AS(generate_corpus(1, 0, {4, 10}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_corpus(1, 1, {3, 10}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_corpus(1, 1, {4, 20000}, {0, 0}), std::invalid_argument);
}

TEST_CASE("pipeline") {
    CHECK(parse_algorithm("improved") == Algorithm::Improved);
    CHECK_THROWS_AS(parse_algorithm("fast"), std::invalid_argument);
    CHECK(std::string(to_string(Algorithm::Traditional)) == "traditional");

    const auto poly = generate_corpus(8, 1, {40, 40}, {2, 2}).front();
    RunConfig cfg;
    cfg.validate = true;
    const auto r = run(cfg, poly);
    CHECK(r.triangulation.size() == 40 + 2 * 2 + poly.holes[0].size() + poly.holes[1].size() - 2);
    CHECK(r.report.triangle_count + r.report.degenerate_count == r.triangulation.size());

    PolygonWithHoles bad{Ring{{{0, 0}, {2, 2}, {2, 0}, {0, 2}}}, {}};
    try {
        run(cfg, bad);
        FAIL("expected a validation error");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == ErrorKind::InvalidRing);
    }
}
