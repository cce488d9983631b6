#include <doctest.h>

#include <cmath>
#include <set>

#include "proxregio/bundles.hpp"
#include "proxregio/errors.hpp"
#include "proxregio/parallelism.hpp"
#include "proxregio/scene.hpp"

#include "oracles.hpp"

using namespace proxregio;

namespace {

Region square(const std::string& id, Point2 at, double side = 1.0, FeatureMap features = {}) {
    return Region(id,
                  {{at.x, at.y}, {at.x + side, at.y}, {at.x + side, at.y + side}, {at.x, at.y + side}},
                  {}, false, std::move(features));
}

ProbeRegistry area_registry() {
    ProbeRegistry reg;
    reg.probes = {{"area", ProbeKind::area}};
    reg.tolerance = 1e-9;
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

Scene lane_scene() {
    // Two lanes of squares with pairwise distinct areas.
    return Scene(Box{{0, 0}, {10, 10}}, 0.01, 0.25, area_registry(),
                 {square("a0", {1, 1}, 0.8), square("a1", {3, 1}, 0.9),
                  square("b0", {1, 6}, 0.7), square("b1", {4, 6}, 1.1)});
}

} // namespace

TEST_CASE("fibre space projects members to their descriptions") {
    const Scene sc = lane_scene();
    const auto reg = area_registry();
    const RegionClass ca{"a0", {"a0", "a1"}, reg};
    const FibreSpace fs = build_fibre_space(ca, sc, reg);
    CHECK(fs.base.size() == 2);
    CHECK(fs.projection.size() == 2);
    CHECK(fs.projection.at("a0").values[0] == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(fs.projection.at("a1").values[0] == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(is_sheaf(fs));
    // Fibres over the base are singletons whose union is the member set.
    std::set<std::string> all;
    for (const auto& v : fs.base) {
        const FibreResult fr = fibre(fs, v);
        CHECK(fr.found);
        CHECK(fr.member_ids.size() == 1);
        all.insert(fr.member_ids.begin(), fr.member_ids.end());
    }
    CHECK(all == std::set<std::string>{"a0", "a1"});
    // A vector outside the base is found nowhere.
    CHECK_FALSE(fibre(fs, FeatureVector{{123.0}}).found);
}

TEST_CASE("duplicated descriptions break the sheaf property") {
    const Scene sc(Box{{0, 0}, {10, 10}}, 0.01, 0.25, color_registry(),
                   {square("r0", {1, 1}, 1, red()), square("r1", {3, 1}, 1, red())});
    const auto reg = color_registry();
    const RegionClass cls = class_of_regions(sc, "r0", reg);
    REQUIRE(cls.members.size() == 2);
    const FibreSpace fs = build_fibre_space(cls, sc, reg);
    CHECK(fs.base.size() == 1);
    CHECK_FALSE(is_sheaf(fs));
    // The single fibre collects every member.
    CHECK(fibre(fs, fs.base[0]).member_ids == std::vector<std::string>{"r0", "r1"});
}

TEST_CASE("bundle parallelism agrees with class parallelism on sheaves") {
    const Scene sc = lane_scene();
    const auto reg = area_registry();
    const RegionClass ca{"a0", {"a0", "a1"}, reg};
    const RegionClass cb{"b0", {"b0", "b1"}, reg};
    const FibreSpace fa = build_fibre_space(ca, sc, reg);
    const FibreSpace fb = build_fibre_space(cb, sc, reg);
    REQUIRE(is_sheaf(fa));
    REQUIRE(is_sheaf(fb));
    const auto via_bundles = bundles_parallel(fa, fb, sc, {1, 0}, false);
    const auto via_classes = classes_parallel(ca, cb, sc, reg, {1, 0}, false);
    CHECK(via_bundles.holds == via_classes.holds);
    CHECK(via_bundles.holds);
    // Vertical direction makes the lanes collide; both routes agree again.
    const auto vb = bundles_parallel(fa, fb, sc, {0, 1}, false);
    const auto vc = classes_parallel(ca, cb, sc, reg, {0, 1}, false);
    CHECK(vb.holds == vc.holds);
    CHECK_FALSE(vb.holds);
}

TEST_CASE("bundle parallelism refuses non-sheaf inputs") {
    const Scene sc(Box{{0, 0}, {10, 10}}, 0.01, 0.25, color_registry(),
                   {square("r0", {1, 1}, 1, red()), square("r1", {3, 1}, 1, red()),
                    square("r2", {1, 6}, 1, red())});
    const auto reg = color_registry();
    const FibreSpace dup = build_fibre_space(RegionClass{"r0", {"r0", "r1"}, reg}, sc, reg);
    const FibreSpace ok = build_fibre_space(RegionClass{"r2", {"r2"}, reg}, sc, reg);
    CHECK_THROWS_AS(bundles_parallel(dup, ok, sc, {1, 0}, false), Error);
}

TEST_CASE("antipodal maps are fixed-point-free involutions") {
    const Box box{{0, 0}, {10, 10}};
    for (auto topo : {GridTopology::circle, GridTopology::sphere_latlong, GridTopology::torus}) {
        const int rows = topo == GridTopology::circle ? 1 : 4;
        const AntipodalGrid g("g", topo, rows, 8, box);
        CHECK(g.cell_count() == rows * 8);
        CHECK(static_cast<int>(g.cells().size()) == g.cell_count());
        for (int i = 0; i < g.cell_count(); ++i) {
            const int j = g.antipode(i);
            CHECK(j != i);
            CHECK(g.antipode(j) == i);
        }
    }
    // Odd dimensions cannot host the involution.
    CHECK_THROWS_AS(AntipodalGrid("bad", GridTopology::torus, 3, 8, box), Error);
    CHECK_THROWS_AS(AntipodalGrid("bad", GridTopology::circle, 1, 7, box), Error);
}

TEST_CASE("uniform fields match at antipodes exactly") {
    const Box box{{0, 0}, {8, 8}};
    AntipodalGrid g("g", GridTopology::torus, 4, 4, box);
    g.set_color_field(std::vector<std::array<double, 3>>(16, {0.2, 0.5, 0.7}));
    const auto m = find_antipodal_match(g);
    REQUIRE(m.has_value());
    CHECK(g.field()[m->cell] == g.field()[m->antipode]);
    CHECK(m->antipode == g.antipode(m->cell));
}

TEST_CASE("symmetrized fields always match, antisymmetric never") {
    const Box box{{0, 0}, {8, 8}};
    AntipodalGrid g("g", GridTopology::torus, 4, 6, box);
    // F(c) = G(c) + G(antipode(c)) is symmetric under the involution.
    std::vector<FeatureVector> raw(24), sym(24);
    for (int i = 0; i < 24; ++i) raw[i].values = {std::sin(i * 1.7), std::cos(i * 0.9)};
    for (int i = 0; i < 24; ++i) {
        const int j = g.antipode(i);
        sym[i].values = {raw[i].values[0] + raw[j].values[0],
                         raw[i].values[1] + raw[j].values[1]};
    }
    g.set_field(sym);
    CHECK(find_antipodal_match(g).has_value());
    // F(c) = index(c) - index(antipode(c)) flips sign at the antipode.
    std::vector<FeatureVector> anti(24);
    for (int i = 0; i < 24; ++i)
        anti[i].values = {static_cast<double>(i - g.antipode(i))};
    g.set_field(anti);
    CHECK_FALSE(find_antipodal_match(g).has_value());
}

TEST_CASE("field width and length are validated") {
    const Box box{{0, 0}, {8, 8}};
    AntipodalGrid g("g", GridTopology::circle, 1, 4, box);
    CHECK_THROWS_AS(g.set_field(std::vector<FeatureVector>(3)), Error);
    std::vector<FeatureVector> ragged(4);
    ragged[0].values = {1.0};
    ragged[1].values = {1.0, 2.0};
    ragged[2].values = {1.0};
    ragged[3].values = {1.0};
    CHECK_THROWS_AS(g.set_field(ragged), Error);
}

TEST_CASE("shape descriptors recognize congruent copies only") {
    ProbeRegistry reg;
    reg.probes = {{"area", ProbeKind::area},
                  {"perimeter", ProbeKind::perimeter},
                  {"diameter", ProbeKind::diameter},
                  {"roundness", ProbeKind::curvature_proxy}};
    reg.tolerance = 1e-6;
    const Region shape("shape", {{0, 0}, {2, 0}, {2, 1}, {0.7, 1.4}, {0, 1}});
    const ShapeDescriptor sd = make_shape_descriptor(shape, reg, 1e-6);
    // A rotated and translated copy lands inside the recognition ball.
    const Region moved("moved", oracles::rigid_motion(shape.outer(), {1, 0.5}, 0.73, {3.2, 4.1}));
    const auto hit = wired_friend_map(sd, moved);
    CHECK(hit.in_ball);
    CHECK(hit.distance < 1e-6);
    // A slightly scaled copy falls outside.
    const Region scaled("scaled", oracles::scaled_ring(shape.outer(), {1, 0.5}, 1.001));
    const auto miss = wired_friend_map(sd, scaled);
    CHECK_FALSE(miss.in_ball);
    CHECK(miss.distance > 1e-6);
}
