#include <doctest.h>

#include <cmath>

#include "proxregio/errors.hpp"
#include "proxregio/region.hpp"

#include "oracles.hpp"

using namespace proxregio;

namespace {

Region unit_square_region(const std::string& id = "sq", Point2 at = {0, 0}) {
    return Region(id, {{at.x, at.y}, {at.x + 1, at.y}, {at.x + 1, at.y + 1}, {at.x, at.y + 1}});
}

Region holed_square(const std::string& id = "holed") {
    return Region(id, {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                  {{{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.75}, {0.75, 0.25}}});
}

} // namespace

TEST_CASE("measures of a unit square") {
    const Region r = unit_square_region();
    CHECK(r.measures().area == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.measures().perimeter == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.measures().diameter == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.measures().centroid.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.measures().centroid.y == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a hole removes area and adds perimeter") {
    const Region r = holed_square();
    // Outer 1x1 minus 0.5x0.5 hole.
    CHECK(r.measures().area == doctest::Approx(0.75).epsilon(1e-12));
    // Outer ring 4 plus hole ring 2.
    CHECK(r.measures().perimeter == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(r.holes().size() == 1);
    CHECK(r.rings().size() == 2);
}

TEST_CASE("wireframe regions report boundary length as area") {
    const Region wf("wire", {{0, 0}, {2, 0}, {2, 1}, {0, 1}}, {}, true);
    CHECK(wf.measures().area == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(wf.outer_triangles().empty());
    CHECK_FALSE(wf.strictly_inside({1.0, 0.5}));
}

TEST_CASE("containment distinguishes interior, boundary, and exterior") {
    const Region r = unit_square_region();
    CHECK(r.strictly_inside({0.5, 0.5}));
    CHECK(r.contains({1.0, 0.5}, 1e-9));
    CHECK_FALSE(r.strictly_inside({1.0, 0.5}, 1e-9));
    CHECK_FALSE(r.contains({2.0, 2.0}));
    CHECK(part_membership(r, {0.5, 0.5}) == PartMembership::interior);
    CHECK(part_membership(r, {1.0, 0.5}) == PartMembership::boundary);
    CHECK(part_membership(r, {2.0, 2.0}) == PartMembership::exterior);
    // Hole interiors are outside the region.
    const Region h = holed_square();
    CHECK_FALSE(h.contains({0.5, 0.5}, 1e-9));
    CHECK(h.strictly_inside({0.1, 0.1}));
}

TEST_CASE("translation preserves measures and shifts the centroid") {
    const Region r = holed_square();
    const Region moved = r.translated({3, 4}, "moved");
    CHECK(moved.id() == "moved");
    CHECK(moved.measures().area == doctest::Approx(r.measures().area).epsilon(1e-12));
    CHECK(moved.measures().perimeter == doctest::Approx(r.measures().perimeter).epsilon(1e-12));
    CHECK(moved.measures().centroid.x == doctest::Approx(r.measures().centroid.x + 3).epsilon(1e-12));
    CHECK(moved.measures().centroid.y == doctest::Approx(r.measures().centroid.y + 4).epsilon(1e-12));
}

TEST_CASE("exact area agrees with the raster-counting oracle") {
    const Region square = unit_square_region();
    CHECK(oracles::raster_area(square, 1000) == doctest::Approx(1.0).epsilon(5e-3));
    const Region holed = holed_square();
    CHECK(oracles::raster_area(holed, 1000) == doctest::Approx(holed.measures().area).epsilon(8e-3));
    const Region hex("hex", regular_polygon({2, 2}, 1.5, 6));
    CHECK(oracles::raster_area(hex, 1000) == doctest::Approx(hex.measures().area).epsilon(5e-3));
}

TEST_CASE("region construction rejects degenerate rings") {
    CHECK_THROWS_AS(Region("bad", Ring{{0, 0}, {1, 0}}), Error);
    CHECK_THROWS_AS(Region("flat", Ring{{0, 0}, {1, 0}, {2, 0}}), Error);
}

TEST_CASE("convexity classification for regions") {
    CHECK(is_convex(unit_square_region()));
    CHECK_FALSE(is_convex(holed_square()));
    const Region lshape("l", {{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}});
    CHECK_FALSE(is_convex(lshape));
}

TEST_CASE("gap between axis-aligned squares") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {2, 0});
    CHECK(cech_distance(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gap between diagonally offset squares") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {1.5, 1.5});
    // Closest approach between corners (1,1) and (1.5,1.5).
    CHECK(cech_distance(a, b) == doctest::Approx(0.70710678118654752).epsilon(1e-12));
}

TEST_CASE("zero gap for touching and overlapping regions") {
    const Region a = unit_square_region("a");
    CHECK(cech_distance(a, unit_square_region("t", {1, 0})) == doctest::Approx(0.0));
    CHECK(cech_distance(a, unit_square_region("o", {0.5, 0.5})) == doctest::Approx(0.0));
    // One region strictly inside the other also has zero gap.
    const Region inner("i", {{0.3, 0.3}, {0.6, 0.3}, {0.6, 0.6}, {0.3, 0.6}});
    CHECK(cech_distance(a, inner) == doctest::Approx(0.0));
}

TEST_CASE("exact gap agrees with the boundary-sampling oracle") {
    const Region a("a", regular_polygon({1.5, 1.5}, 1.0, 7));
    const Region b("b", regular_polygon({5.2, 2.4}, 1.3, 5));
    const double exact = cech_distance(a, b);
    CHECK(exact > 0.0);
    CHECK(oracles::sampled_gap(a, b, 20000) == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("intersection area of offset squares") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {0.5, 0.5});
    CHECK(intersection_area(a, b) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(intersection_area(a, unit_square_region("far", {3, 3})) == doctest::Approx(0.0));
}

TEST_CASE("intersection area respects holes") {
    const Region holed = holed_square();
    const Region inner("in", {{0.3, 0.3}, {0.7, 0.3}, {0.7, 0.7}, {0.3, 0.7}});
    // The probe square sits entirely inside the hole.
    CHECK(intersection_area(holed, inner) == doctest::Approx(0.0).epsilon(1e-12));
    const Region corner("c", {{0, 0}, {0.25, 0}, {0.25, 0.25}, {0, 0.25}});
    CHECK(intersection_area(holed, corner) == doctest::Approx(0.0625).epsilon(1e-9));
}

TEST_CASE("shared boundary length of edge-adjacent squares") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {1, 0});
    Point2 w0, w1;
    CHECK(shared_boundary_length(a, b, &w0, &w1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(w0.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(w1.x == doctest::Approx(1.0).epsilon(1e-9));
    // Corner contact shares no length.
    CHECK(shared_boundary_length(a, unit_square_region("d", {1, 1})) == doctest::Approx(0.0));
}

TEST_CASE("interior overlap point exists exactly when interiors meet") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {0.5, 0.5});
    const auto p = interior_overlap_point(a, b);
    REQUIRE(p.has_value());
    CHECK(a.strictly_inside(*p));
    CHECK(b.strictly_inside(*p));
    CHECK_FALSE(interior_overlap_point(a, unit_square_region("t", {1, 0})).has_value());
    CHECK_FALSE(interior_overlap_point(a, unit_square_region("f", {3, 0})).has_value());
}

TEST_CASE("dilation grows a convex region by strips and arcs") {
    const Box box{{-10, -10}, {10, 10}};
    const Region r = unit_square_region();
    const double radius = 0.3;
    const auto d = dilate(r, radius, box);
    CHECK_FALSE(d.clipped);
    CHECK_FALSE(d.conservative);
    const int n = 4 * kArcSegmentsPerQuarter;
    const double arcs = 0.5 * n * radius * radius * std::sin(2.0 * M_PI / n);
    CHECK(d.region.measures().area == doctest::Approx(1.0 + 4.0 * radius + arcs).epsilon(1e-9));
    // Every original vertex lies strictly inside the dilation.
    for (Point2 p : r.outer()) CHECK(d.region.strictly_inside(p));
}

TEST_CASE("dilation clips against a tight box") {
    const Box box{{0, 0}, {1.1, 1.1}};
    const auto d = dilate(unit_square_region(), 0.5, box);
    CHECK(d.clipped);
    CHECK(d.region.measures().area == doctest::Approx(1.1 * 1.1).epsilon(1e-9));
}

TEST_CASE("zero-radius dilation is the identity") {
    const Box box{{-10, -10}, {10, 10}};
    const auto d = dilate(unit_square_region(), 0.0, box);
    CHECK(d.region.measures().area == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("convex hull region fills concavities") {
    const Region lshape("l", {{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}});
    const Region hull = convex_hull_region(lshape, "hull");
    // The notch corner is cut by the chord (1,0.5)-(0.5,1): a pentagon of area
    // 1 - 0.5*0.5/2 = 0.875.
    CHECK(hull.measures().area == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(is_convex(hull));
}

TEST_CASE("vertex-set diameter bound for separated squares") {
    const Region a = unit_square_region("a");
    const Region b = unit_square_region("b", {3, 0});
    // Farthest vertices are (0,0)..(4,1) or (0,1)..(4,0).
    CHECK(hausdorff_upper_bound(a, b) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-12));
}
