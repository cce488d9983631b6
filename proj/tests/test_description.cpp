#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "proxregio/description.hpp"
#include "proxregio/scene.hpp"

#include "oracles.hpp"

using namespace proxregio;

namespace {

Region square(const std::string& id, Point2 at, double side = 1.0, FeatureMap features = {}) {
    return Region(id,
                  {{at.x, at.y}, {at.x + side, at.y}, {at.x + side, at.y + side}, {at.x, at.y + side}},
                  {}, false, std::move(features));
}

ProbeRegistry geometry_registry() {
    ProbeRegistry reg;
    reg.probes = {{"area", ProbeKind::area}, {"perimeter", ProbeKind::perimeter}};
    reg.tolerance = 1e-6;
    return reg;
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
FeatureMap green() { return {{"color_r", 0.0}, {"color_g", 1.0}, {"color_b", 0.0}}; }
FeatureMap blue() { return {{"color_r", 0.0}, {"color_g", 0.0}, {"color_b", 1.0}}; }

Scene color_scene() {
    return Scene(Box{{0, 0}, {10, 10}}, 0.1, 0.25, color_registry(),
                 {square("a", {1, 1}, 1, red()), square("b", {3, 1}, 1, red()),
                  square("c", {5, 1}, 1, blue()), square("d", {7, 1}, 1, green()),
                  square("e", {1, 3}, 1, red())});
}

} // namespace

TEST_CASE("geometric probes read measures directly") {
    const Region r = square("sq", {0, 0});
    const FeatureVector v = describe(r, geometry_registry());
    REQUIRE(v.values.size() == 2);
    CHECK(v.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.values[1] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("feature store entries override computed probes") {
    const Region r = square("sq", {0, 0}, 1.0, {{"area", 42.0}});
    const FeatureVector v = describe(r, geometry_registry());
    CHECK(v.values[0] == doctest::Approx(42.0));
    CHECK(v.values[1] == doctest::Approx(4.0));
}

TEST_CASE("color probes default to zero when unset") {
    const Region plain = square("plain", {0, 0});
    const FeatureVector v = describe(plain, color_registry());
    CHECK(v.values == std::vector<double>{0.0, 0.0, 0.0});
    const FeatureVector w = describe(square("r", {0, 0}, 1, red()), color_registry());
    CHECK(w.values == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("roundness probe approaches one for near-circular rings") {
    ProbeRegistry reg;
    reg.probes = {{"roundness", ProbeKind::curvature_proxy}};
    const Region disk("disk", disk_ring({0, 0}, 1.0));
    const double q = describe(disk, reg).values[0];
    CHECK(q > 0.995);
    CHECK(q < 1.0);
    const double sq = describe(square("sq", {0, 0}), reg).values[0];
    CHECK(sq == doctest::Approx(M_PI / 4.0).epsilon(1e-9));
}

TEST_CASE("feature matching uses a per-component tolerance") {
    const FeatureVector a{{1.0, 2.0}};
    const FeatureVector b{{1.4, 2.0}};
    CHECK(features_match(a, b, 0.5));
    CHECK_FALSE(features_match(a, b, 0.3));
    CHECK_FALSE(features_match(a, FeatureVector{{1.0}}, 10.0));
    CHECK(feature_distance({{0.0, 0.0}}, {{3.0, 4.0}}) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("descriptive intersection pairs matching colors across a distance") {
    const Scene sc = color_scene();
    const auto reg = color_registry();
    const auto same = descriptive_intersection({"a"}, {"b"}, sc, reg);
    CHECK_FALSE(same.empty());
    for (const auto& cell : same) {
        const bool owner_ok = cell.owner == "a" || cell.owner == "b";
        CHECK(owner_ok);
    }
    CHECK(descriptive_intersection({"a"}, {"c"}, sc, reg).empty());
    CHECK(descriptive_intersection({"c"}, {"d"}, sc, reg).empty());
    // Mixed group: any shared description suffices.
    CHECK_FALSE(descriptive_intersection({"a", "c"}, {"b", "d"}, sc, reg).empty());
}

TEST_CASE("description sets deduplicate cell descriptions") {
    const Scene sc = color_scene();
    const auto reg = color_registry();
    CHECK(description_set({"a", "b", "e"}, sc, reg).size() == 1);
    CHECK(description_set({"a", "c"}, sc, reg).size() == 2);
    CHECK(description_set({}, sc, reg).empty());
}

TEST_CASE("overlap makes cells carry every covering description") {
    const Scene sc(Box{{0, 0}, {10, 10}}, 0.1, 0.25, color_registry(),
                   {square("r", {1, 1}, 2, red()), square("g", {2, 2}, 2, green())});
    const auto reg = color_registry();
    const auto ds = description_set({"r"}, sc, reg);
    // The red square's cells inside the overlap also carry green.
    CHECK(ds.size() == 2);
    CHECK_FALSE(descriptive_intersection({"r"}, {"g"}, sc, reg).empty());
}

TEST_CASE("interior descriptions fall back for sub-cell regions") {
    const Scene sc(Box{{0, 0}, {10, 10}}, 0.1, 0.25, color_registry(),
                   {square("tiny", {1, 1}, 0.1, red()), square("big", {3, 3}, 2, red())});
    const auto reg = color_registry();
    // The tiny square has no interior cell at pitch 0.25, so its own
    // description stands in.
    const auto tiny = interior_description_set({"tiny"}, sc, reg);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].values == std::vector<double>{1.0, 0.0, 0.0});
    const auto big = interior_description_set({"big"}, sc, reg);
    CHECK_FALSE(big.empty());
}

TEST_CASE("wireframe regions contribute no interior descriptions") {
    const Region wire("wire", {{1, 1}, {3, 1}, {3, 3}, {1, 3}}, {}, true);
    const Scene sc(Box{{0, 0}, {10, 10}}, 0.1, 0.25, color_registry(), {wire});
    CHECK(interior_description_set({"wire"}, sc, color_registry()).empty());
}

TEST_CASE("congruence relations") {
    const Region a = square("a", {0, 0});
    const Region b = a.translated({4, 2}, "b");
    const auto reg = color_registry();
    CHECK(descriptively_congruent(a, b, reg));
    CHECK(area_congruent(a, b));
    CHECK(equal_perimeters(a, b, 1e-9));
    CHECK(equal_interior_areas(a, b, 1e-9));
    const Region bigger = square("big", {0, 0}, 1.3);
    CHECK_FALSE(area_congruent(a, bigger));
    CHECK_FALSE(equal_perimeters(a, bigger, 1e-9));
    CHECK_FALSE(equal_interior_areas(a, bigger, 1e-9));
}

TEST_CASE("class membership matches the brute-force scan") {
    const Scene sc = color_scene();
    const auto reg = color_registry();
    const RegionClass cls = class_of_regions(sc, "a", reg);
    CHECK(cls.representative == "a");
    CHECK(cls.members == std::vector<std::string>{"a", "b", "e"});
    CHECK(cls.members == oracles::brute_class_members(sc, reg, "a"));
    CHECK(class_of_regions(sc, "c", reg).members == std::vector<std::string>{"c"});
    // Every region of the scene belongs to its own class.
    for (const Region& r : sc.regions()) {
        const auto m = class_of_regions(sc, r.id(), reg).members;
        CHECK(std::find(m.begin(), m.end(), r.id()) != m.end());
    }
}

TEST_CASE("family closure matches the brute-force union of classes") {
    const Scene sc = color_scene();
    const auto reg = color_registry();
    const auto closure = family_closure({"a", "c"}, sc, reg);
    CHECK(closure == std::vector<std::string>{"a", "b", "c", "e"});
    CHECK(closure == oracles::brute_closure(sc, reg, {"a", "c"}));
    // Closures are idempotent.
    CHECK(family_closure(closure, sc, reg) == closure);
}

TEST_CASE("bounded families require strict feature proximity") {
    const Scene sc = color_scene();
    const auto reg = color_registry();
    CHECK(phi_bounded({"a", "b", "e"}, "a", 0.001, sc, reg));
    // Zero bound fails even for identical descriptions (strict inequality).
    CHECK_FALSE(phi_bounded({"a", "b"}, "a", 0.0, sc, reg));
    // A blue member sits at color distance sqrt(2) from a red anchor.
    CHECK_FALSE(phi_bounded({"a", "c"}, "a", 1.0, sc, reg));
    CHECK(phi_bounded({"a", "c"}, "a", 2.0, sc, reg));
}
