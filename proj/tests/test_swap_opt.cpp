#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "earclip/bridge.hpp"
#include "earclip/corpus.hpp"
#include "earclip/swap_opt.hpp"
#include "oracles.hpp"

using namespace earclip;

namespace {

Triangulation quad(const std::vector<Point2>& p) {
    Triangulation t(p, {0, 1, 2, 3});
    t.add_triangle(0, 1, 2);
    t.add_triangle(0, 2, 3);
    return t;
}

bool same_triangles(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("angle bound clamps") {
    CHECK(AngleBound{}.degrees() == 30.0);
    CHECK(AngleBound(45).degrees() == 45.0);
    CHECK_FALSE(AngleBound(45).clamped());
    CHECK(AngleBound(75).degrees() == 60.0);
    CHECK(AngleBound(75).clamped());
    CHECK(AngleBound(-5).degrees() == 0.0);
    CHECK_THROWS_AS(AngleBound(std::nan("")), std::invalid_argument);
}

TEST_CASE("kite swap") {
    auto t = quad({{0, 0}, {10, -1}, {20, 0}, {10, 1}});
    const auto r = try_swap(0, 1, t);
    CHECK(r.swapped);
    CHECK(r.min_before == doctest::Approx(5.710593137499633).epsilon(1e-12));
    CHECK(r.min_after == doctest::Approx(11.42118627499929).epsilon(1e-12));
    CHECK(t.edge_use(1, 3).count() == 2);
    CHECK(t.edge_use(0, 2).count() == 0);
    CHECK(t.area() == doctest::Approx(20.0));
    for (std::size_t i = 0; i < 2; ++i) {
        const auto c = t.corners(i);
        CHECK(oracle::area2(c[0], c[1], c[2]) > 0);
    }
}

TEST_CASE("no swap when the flip is worse or the quad is not convex") {
    auto good = quad({{0, 0}, {1, 0}, {1, 1}, {0, 1}});  // square: tie, no strict gain
    CHECK_FALSE(try_swap(0, 1, good).swapped);

    auto dart = quad({{0, 0}, {4, 0}, {1, 1}, {0, 4}});  // reflex at (1,1)
    CHECK_FALSE(try_swap(0, 1, dart).swapped);

    auto lean = quad({{0, 0}, {1, 0}, {2, 1}, {1, 1}});
    CHECK(try_swap(0, 1, lean).swapped == oracle::swap_verdict({1, 0}, {2, 1}, {1, 1}, {0, 0}));
}

TEST_CASE("try_swap rejects non-adjacent triangles") {
    Triangulation t({{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}}, {0, 1, 2, 3, 4, 5});
    t.add_triangle(0, 1, 2);
    t.add_triangle(3, 4, 5);
    CHECK_THROWS_AS(try_swap(0, 1, t), std::logic_error);
    CHECK_THROWS_AS(try_swap(0, 0, t), std::logic_error);
}

TEST_CASE("neighbour across the longest edge") {
    Triangulation t({{0, 0}, {10, 0}, {5, 1}, {2, 4}}, {0, 1, 2, 3});
    t.add_triangle(0, 1, 2);
    t.add_triangle(0, 2, 3);
    CHECK_FALSE(find_neighbor_across_longest_edge(0, t).has_value());  // longest is (0,0)-(10,0), boundary
    CHECK(find_neighbor_across_longest_edge(1, t) == std::optional<std::size_t>{0});
}

TEST_CASE("swap verdict matches the twelve-angle oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    std::uniform_real_distribution<double> rad(0.2, 3.0);
    int n = 0;
    while (n < 1000) {
        std::vector<double> th(4);
        for (auto& a : th) a = ang(rng);
        std::sort(th.begin(), th.end());
        std::vector<Point2> p;
        for (double a : th) {
            const double r = rad(rng);
            p.push_back({r * std::cos(a), r * std::sin(a)});
        }
        bool convex = true;
        for (int i = 0; i < 4; ++i) convex = convex && oracle::area2(p[i], p[(i + 1) % 4], p[(i + 2) % 4]) > 1e-6;
        if (!convex) continue;
        ++n;
        auto t = quad(p);
        const bool want = oracle::swap_verdict(p[1], p[2], p[3], p[0]);
        CHECK(try_swap(0, 1, t).swapped == want);
    }
}

TEST_CASE("improved with bound 0 equals basic") {
    for (const auto& poly : generate_corpus(21, 10, {10, 80}, {0, 2})) {
        const auto dr = eliminate_holes(poly);
        SwapStats s;
        const auto a = triangulate_improved(build_ring(dr.ring, dr.original_index), AngleBound(0), Execution::Serial, &s);
        const auto b = triangulate_basic(build_ring(dr.ring, dr.original_index));
        CHECK(same_triangles(a, b));
        CHECK(s.sharp == 0);
    }
}

TEST_CASE("improved keeps the mesh valid and never worsens a pair") {
    SwapStats total;
    for (const auto& poly : generate_corpus(22, 20, {10, 120}, {0, 3})) {
        const auto dr = eliminate_holes(poly);
        SwapStats s;
        const auto t = triangulate_improved(build_ring(dr.ring, dr.original_index), AngleBound(30), Execution::Serial, &s);
        const auto m = oracle::check_mesh(poly, dr, t);
        CHECK(m.ok());
        total.swapped += s.swapped;
        total.violations += s.violations;
    }
    CHECK(total.swapped > 0);
    CHECK(total.violations == 0);
}
