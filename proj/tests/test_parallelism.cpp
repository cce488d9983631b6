#include <doctest.h>

#include <cmath>

#include "proxregio/errors.hpp"
#include "proxregio/parallelism.hpp"

using namespace proxregio;

namespace {

Region square(const std::string& id, Point2 at, double side = 1.0, FeatureMap features = {}) {
    return Region(id,
                  {{at.x, at.y}, {at.x + side, at.y}, {at.x + side, at.y + side}, {at.x, at.y + side}},
                  {}, false, std::move(features));
}

ProbeRegistry color_registry() {
    ProbeRegistry reg;
    reg.probes = {{"color_r", ProbeKind::color_r},
                  {"color_g", ProbeKind::color_g},
                  {"color_b", ProbeKind::color_b}};
    reg.tolerance = 1e-6;
    return reg;
}

FeatureMap red() { return {{"color_r", 1.0}, {"color_g", 0.0}, {"color_b", 0.0}}; }
FeatureMap blue() { return {{"color_r", 0.0}, {"color_g", 0.0}, {"color_b", 1.0}}; }

Scene make_scene(std::vector<Region> regions) {
    return Scene(Box{{0, 0}, {10, 10}}, 0.01, 0.25, color_registry(), std::move(regions));
}

} // namespace

TEST_CASE("line construction sweeps a capsule band") {
    const Scene sc = make_scene({});
    const PhysicalLine l = make_line("l", {2, 2}, {6, 2}, 0.2, sc);
    CHECK(l.region.strictly_inside({4, 2}));
    CHECK(l.region.strictly_inside({4, 2.09}));
    CHECK_FALSE(l.region.contains({4, 2.3}));
    CHECK_THROWS_AS(make_line("bad", {2, 2}, {2, 2}, 0.2, sc), Error);
    CHECK_THROWS_AS(make_line("bad", {2, 2}, {6, 2}, 0.0, sc), Error);
}

TEST_CASE("offset lines with equal slope are locally parallel") {
    const Scene sc = make_scene({});
    const PhysicalLine a = make_line("a", {2, 2}, {6, 2}, 0.2, sc);
    const PhysicalLine b = make_line("b", {2, 5}, {6, 5}, 0.2, sc);
    const auto v = locally_parallel(a, b);
    CHECK(v.holds);
    REQUIRE(v.transversal.has_value());
    // The transversal meets both spines at right angles: for horizontal
    // lines it must be vertical.
    const auto [t0, t1] = *v.transversal;
    CHECK(std::abs(t0.x - t1.x) < 1e-9);
    // Opposite orientation is still parallel (directions compared mod pi).
    const PhysicalLine c = make_line("c", {6, 7}, {2, 7}, 0.2, sc);
    CHECK(locally_parallel(a, c).holds);
}

TEST_CASE("rotated lines are not locally parallel") {
    const Scene sc = make_scene({});
    const PhysicalLine a = make_line("a", {2, 2}, {6, 2}, 0.2, sc);
    const PhysicalLine r = make_line("r", {2, 5}, {6, 5.8}, 0.2, sc);
    CHECK_FALSE(locally_parallel(a, r).holds);
}

TEST_CASE("parallel projections must overlap for a right-angle transversal") {
    const Scene sc = make_scene({});
    const PhysicalLine a = make_line("a", {1, 2}, {3, 2}, 0.2, sc);
    const PhysicalLine b = make_line("b", {6, 5}, {9, 5}, 0.2, sc);
    // Same slope, but no point of one projects onto the other.
    CHECK_FALSE(locally_parallel(a, b).holds);
}

TEST_CASE("extended bands of parallel lines stay strongly far") {
    const Scene sc = make_scene({});
    const PhysicalLine a = make_line("a", {2, 2}, {6, 2}, 0.2, sc);
    const PhysicalLine b = make_line("b", {3, 6}, {7, 6}, 0.2, sc);
    const auto v = proximal_parallel(a, b, sc);
    CHECK(v.holds);
    REQUIRE(v.gap.has_value());
    CHECK(*v.gap > 2.0 * sc.epsilon());
    // Diagonal parallel pair exercises box clipping of the extensions.
    const PhysicalLine d1 = make_line("d1", {2, 2}, {5, 5}, 0.2, sc);
    const PhysicalLine d2 = make_line("d2", {4, 2}, {7, 5}, 0.2, sc);
    CHECK(proximal_parallel(d1, d2, sc).holds);
}

TEST_CASE("lines whose extensions meet are not proximally parallel") {
    const Scene sc = make_scene({});
    const PhysicalLine a = make_line("a", {2, 2}, {6, 2}, 0.2, sc);
    // Slightly tilted: crosses a's supporting line inside the box.
    const PhysicalLine t = make_line("t", {2, 2.6}, {6, 1.8}, 0.2, sc);
    CHECK_FALSE(proximal_parallel(a, t, sc).holds);
}

TEST_CASE("sweeping extends a region along both directions to the box") {
    const Scene sc = make_scene({});
    bool conservative = true;
    const Region swept = sweep_region(square("s", {4, 4}), {1, 0}, sc.box(), "s.swept",
                                      &conservative);
    CHECK_FALSE(conservative);
    CHECK(swept.strictly_inside({0.5, 4.5}));
    CHECK(swept.strictly_inside({9.5, 4.5}));
    CHECK_FALSE(swept.contains({4.5, 6.0}));
    // Non-convex input falls back to the hull and says so.
    const Region lshape("l", {{4, 4}, {5, 4}, {5, 4.5}, {4.5, 4.5}, {4.5, 5}, {4, 5}});
    sweep_region(lshape, {1, 0}, sc.box(), "l.swept", &conservative);
    CHECK(conservative);
}

TEST_CASE("regions in distinct lanes are parallel, same lane not") {
    const Scene sc = make_scene({square("a", {1, 2}, 1, red()), square("b", {6, 6}, 1, red()),
                                 square("c", {7, 2.4}, 1, red())});
    const auto ok = parallel_regions(sc.find_region("a"), sc.find_region("b"), sc, {1, 0});
    CHECK(ok.holds);
    REQUIRE(ok.gap.has_value());
    CHECK(*ok.gap > 2.0 * sc.epsilon());
    // c shares a's horizontal lane, so the sweeps collide.
    const auto clash = parallel_regions(sc.find_region("a"), sc.find_region("c"), sc, {1, 0});
    CHECK_FALSE(clash.holds);
    // Along the vertical direction the same pair is parallel.
    CHECK(parallel_regions(sc.find_region("a"), sc.find_region("c"), sc, {0, 1}).holds);
}

TEST_CASE("descriptive parallelism needs matching descriptions as well") {
    const Scene sc = make_scene({square("a", {1, 2}, 1, red()), square("b", {6, 6}, 1, red()),
                                 square("k", {2, 8}, 1, blue())});
    const auto reg = color_registry();
    CHECK(descriptively_parallel(sc.find_region("a"), sc.find_region("b"), sc, reg, {1, 0}).holds);
    // Parallel lanes but mismatched descriptions.
    const auto off = descriptively_parallel(sc.find_region("a"), sc.find_region("k"), sc, reg, {1, 0});
    CHECK_FALSE(off.holds);
}

TEST_CASE("class parallelism quantifies over every cross pair") {
    const Scene sc = make_scene({square("a0", {1, 1}, 0.8, red()), square("a1", {3, 1}, 0.8, red()),
                                 square("b0", {1, 6}, 0.8, red()), square("b1", {4, 6}, 0.8, red()),
                                 square("mid", {6, 1.2}, 0.8, red())});
    const auto reg = color_registry();
    const RegionClass ca{"a0", {"a0", "a1"}, reg};
    const RegionClass cb{"b0", {"b0", "b1"}, reg};
    const auto ok = classes_parallel(ca, cb, sc, reg, {1, 0}, false);
    CHECK(ok.holds);
    // The verdict matches the exhaustive pairwise scan.
    bool brute = true;
    for (const auto& x : ca.members)
        for (const auto& y : cb.members)
            brute = brute && parallel_regions(sc.find_region(x), sc.find_region(y), sc, {1, 0}).holds;
    CHECK(ok.holds == brute);
    // Adding a member in a shared lane breaks it and names the pair.
    const RegionClass cb_bad{"b0", {"b0", "b1", "mid"}, reg};
    const auto bad = classes_parallel(ca, cb_bad, sc, reg, {1, 0}, false);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failing_pair.has_value());
    CHECK(bad.failing_pair->second == "mid");
    // Classes sharing a member are rejected.
    const RegionClass overlap{"a1", {"a1", "b0"}, reg};
    CHECK_THROWS_AS(classes_parallel(ca, overlap, sc, reg, {1, 0}, false), Error);
}
