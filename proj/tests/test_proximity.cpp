#include <doctest.h>

#include <cmath>

#include "proxregio/errors.hpp"
#include "proxregio/proximity.hpp"
#include "proxregio/scene.hpp"

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

Scene make_scene(std::vector<Region> regions, double eps = 0.1) {
    return Scene(Box{{0, 0}, {10, 10}}, eps, 0.25, color_registry(), std::move(regions));
}

} // namespace

TEST_CASE("overlapping squares are near and strongly near") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {1.5, 1.5}, 1, red())});
    const auto n = near({"a"}, {"b"}, sc);
    CHECK(n.holds);
    REQUIRE(n.gap.has_value());
    CHECK(*n.gap == doctest::Approx(0.0));
    const auto sn = strongly_near({"a"}, {"b"}, sc);
    CHECK(sn.holds);
    REQUIRE(sn.shared_point.has_value());
    CHECK(sc.find_region("a").strictly_inside(*sn.shared_point));
    CHECK(sc.find_region("b").strictly_inside(*sn.shared_point));
    CHECK(sn.shared_cell.has_value());
    CHECK_FALSE(far({"a"}, {"b"}, sc).holds);
    CHECK_FALSE(strongly_far({"a"}, {"b"}, sc).holds);
}

TEST_CASE("edge-adjacent squares are strongly near through a shared segment") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {2, 1}, 1, red())});
    const auto sn = strongly_near({"a"}, {"b"}, sc);
    CHECK(sn.holds);
    REQUIRE(sn.shared_segment.has_value());
    const auto [w0, w1] = *sn.shared_segment;
    CHECK(dist(w0, w1) > 0.0);
    const Point2 mid{(w0.x + w1.x) / 2, (w0.y + w1.y) / 2};
    CHECK(sc.find_region("a").contains(mid, 1e-9));
    CHECK(sc.find_region("b").contains(mid, 1e-9));
}

TEST_CASE("corner contact is near but not strongly near") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {2, 2}, 1, red())});
    CHECK(near({"a"}, {"b"}, sc).holds);
    CHECK_FALSE(strongly_near({"a"}, {"b"}, sc).holds);
}

TEST_CASE("a gap between one and two epsilon is far but not strongly far") {
    // epsilon 0.1, gap 0.15.
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {2.15, 1}, 1, red())});
    const auto f = far({"a"}, {"b"}, sc);
    CHECK(f.holds);
    REQUIRE(f.gap.has_value());
    CHECK(*f.gap == doctest::Approx(0.15).epsilon(1e-12));
    const auto sf = strongly_far({"a"}, {"b"}, sc);
    CHECK_FALSE(sf.holds);
    CHECK(sf.separator.empty());
}

TEST_CASE("a wide gap is strongly far with a verified separator") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {6, 6}, 1, blue())});
    const auto sf = strongly_far({"a"}, {"b"}, sc);
    CHECK(sf.holds);
    REQUIRE_FALSE(sf.separator.empty());
    const Region& c = sf.separator.front();
    // The separator swallows the first side...
    for (Point2 p : sc.find_region("a").outer()) CHECK(c.contains(p, 1e-9));
    // ...and stays clear of the second.
    for (Point2 p : sc.find_region("b").outer()) CHECK_FALSE(c.contains(p, 1e-9));
    CHECK(cech_distance(c, sc.find_region("b")) > sc.epsilon());
}

TEST_CASE("near within the epsilon margin despite empty intersection") {
    // Gap 0.05 < epsilon 0.1.
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {2.05, 1}, 1, red())});
    CHECK(near({"a"}, {"b"}, sc).holds);
    CHECK_FALSE(strongly_near({"a"}, {"b"}, sc).holds);
    CHECK_FALSE(far({"a"}, {"b"}, sc).holds);
}

TEST_CASE("group distance is the minimum over member pairs") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {5, 1}, 1, red()),
                                 square("c", {3, 1}, 1, blue())});
    CHECK(cech_distance({"a", "c"}, {"b"}, sc) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cech_distance({"a"}, {"b"}, sc) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("nearness to a union splits over the parts") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {6, 6}, 1, red()),
                                 square("c", {1.5, 1.5}, 1, blue())});
    const bool joint = near({"a"}, {"b", "c"}, sc).holds;
    const bool part_b = near({"a"}, {"b"}, sc).holds;
    const bool part_c = near({"a"}, {"c"}, sc).holds;
    CHECK(joint == (part_b || part_c));
    CHECK(joint);
    CHECK_FALSE(part_b);
    CHECK(part_c);
}

TEST_CASE("nothing is near the empty group") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red())});
    CHECK_FALSE(near({}, {"a"}, sc).holds);
    CHECK_FALSE(near({"a"}, {}, sc).holds);
    CHECK(far({}, {"a"}, sc).holds);
}

TEST_CASE("unknown ids are rejected") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red())});
    CHECK_THROWS_AS(near({"a"}, {"nope"}, sc), Error);
}

TEST_CASE("descriptive nearness sees matching features at any distance") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {7, 7}, 1, red()),
                                 square("c", {4, 4}, 1, blue())});
    const auto reg = color_registry();
    CHECK(descriptively_near({"a"}, {"b"}, sc, reg).holds);
    CHECK_FALSE(descriptively_near({"a"}, {"c"}, sc, reg).holds);
    // The verdict mirrors the emptiness of the descriptive intersection.
    CHECK(descriptive_intersection({"a"}, {"b"}, sc, reg).empty() ==
          !descriptively_near({"a"}, {"b"}, sc, reg).holds);
    CHECK(descriptive_intersection({"a"}, {"c"}, sc, reg).empty() ==
          !descriptively_near({"a"}, {"c"}, sc, reg).holds);
}

TEST_CASE("descriptive strong nearness uses interior descriptions") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {7, 7}, 1, red()),
                                 square("c", {4, 4}, 1, blue())});
    const auto reg = color_registry();
    CHECK(descriptively_strongly_near({"a"}, {"b"}, sc, reg).holds);
    CHECK_FALSE(descriptively_strongly_near({"a"}, {"c"}, sc, reg).holds);
    // Empty groups are never descriptively strongly near.
    CHECK_FALSE(descriptively_strongly_near({}, {"a"}, sc, reg).holds);
}

TEST_CASE("single-region conveniences accept unregistered probes") {
    const Scene sc = make_scene({square("a", {1, 1}, 3, red())});
    const Region probe = square("probe", {2, 2}, 0.1, red());
    CHECK(strongly_near(probe, sc.find_region("a"), sc).holds);
    CHECK(near(probe, sc.find_region("a"), sc).holds);
    const Region away = square("away", {8, 8}, 0.1, red());
    CHECK(far(away, sc.find_region("a"), sc).holds);
    CHECK(dnear(away, sc.find_region("a"), sc, color_registry()).holds);
}

TEST_CASE("relator evaluation bundles the default relations in order") {
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {1.5, 1.5}, 1, red())});
    const auto report = relator_eval(default_relator(), {"a"}, {"b"}, sc);
    REQUIRE(report.verdicts.size() == 4);
    CHECK(report.verdicts[0].relation == Relation::near);
    CHECK(report.verdicts[1].relation == Relation::strongly_near);
    CHECK(report.verdicts[2].relation == Relation::far);
    CHECK(report.verdicts[3].relation == Relation::strongly_far);
    CHECK(report.verdicts[0].holds);
    CHECK(report.verdicts[1].holds);
    CHECK_FALSE(report.verdicts[2].holds);
    CHECK_FALSE(report.verdicts[3].holds);
    CHECK_FALSE(report.implication_violation);
}

TEST_CASE("strong nearness implies nearness and descriptive nearness") {
    // Spot check of the implication chain on a mixed constellation.
    const Scene sc = make_scene({square("a", {1, 1}, 1, red()), square("b", {1.7, 1.3}, 1, blue()),
                                 square("c", {3.5, 1}, 1, red()), square("d", {1.2, 1.4}, 0.5, red())});
    const auto reg = color_registry();
    const std::vector<std::string> ids = {"a", "b", "c", "d"};
    for (const auto& x : ids)
        for (const auto& y : ids) {
            if (x == y) continue;
            const bool sn = strongly_near({x}, {y}, sc).holds;
            const bool n = near({x}, {y}, sc).holds;
            const bool dn = descriptively_near({x}, {y}, sc, reg).holds;
            const bool dsn = descriptively_strongly_near({x}, {y}, sc, reg).holds;
            if (sn) CHECK(n);
            if (sn) CHECK(dn);
            if (dsn) CHECK(dn);
            CHECK(far({x}, {y}, sc).holds == !n);
        }
}
