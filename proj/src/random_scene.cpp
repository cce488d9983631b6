#include "proxregio/random_scene.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "proxregio/errors.hpp"

namespace proxregio {

double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_double(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (hi < lo) raise(ErrorKind::parameter, "uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

Ring random_convex_ring(std::mt19937_64& rng, Point2 center, double radius) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        const int n = uniform_int(rng, 4, 8);
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            // Strictly increasing angles keep the walk simple; jittered radii
            // vary the silhouette.
            const double angle = 2.0 * M_PI * (i + 0.25 + 0.5 * uniform_double(rng)) / n;
            const double r = radius * uniform_range(rng, 0.7, 1.0);
            pts.push_back(center + Point2{r * std::cos(angle), r * std::sin(angle)});
        }
        Ring hull = convex_hull(pts);
        if (static_cast<int>(hull.size()) >= 4) return hull;
    }
    return regular_polygon(center, radius, 6);
}

namespace {

Point2 project_onto_segment(Point2 a, Point2 b, Point2 p) {
    const Point2 d = b - a;
    const double len2 = dot(d, d);
    if (len2 <= 0.0) return a;
    const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return a + d * t;
}

// Closest boundary points between two disjoint regions (outer rings suffice
// for the convex shapes the generator emits).
std::pair<Point2, Point2> closest_points(const Region& a, const Region& b) {
    double best = std::numeric_limits<double>::infinity();
    std::pair<Point2, Point2> witness{a.outer().front(), b.outer().front()};
    const Ring& ra = a.outer();
    const Ring& rb = b.outer();
    const std::size_t na = ra.size(), nb = rb.size();
    auto consider = [&](Point2 p, Point2 q) {
        const double d = dist(p, q);
        if (d < best) {
            best = d;
            witness = {p, q};
        }
    };
    for (std::size_t i = 0; i < na; ++i) {
        const Point2 a1 = ra[i], a2 = ra[(i + 1) % na];
        for (std::size_t j = 0; j < nb; ++j) {
            const Point2 b1 = rb[j], b2 = rb[(j + 1) % nb];
            consider(a1, project_onto_segment(b1, b2, a1));
            consider(a2, project_onto_segment(b1, b2, a2));
            consider(project_onto_segment(a1, a2, b1), b1);
            consider(project_onto_segment(a1, a2, b2), b2);
        }
    }
    return witness;
}

std::size_t extreme_vertex(const Ring& r, double sign) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (sign * r[i].x > sign * r[best].x ||
            (r[i].x == r[best].x && r[i].y < r[best].y))
            best = i;
    }
    return best;
}

Ring translated_ring(const Ring& r, Point2 delta) {
    Ring out = r;
    for (Point2& p : out) p = p + delta;
    return out;
}

enum class PairKind { overlapping, touching, narrow_gap, well_separated };

struct BuiltPair {
    Ring a;
    Ring b;
};

BuiltPair build_pair(std::mt19937_64& rng, PairKind kind, Point2 center, double tile,
                     double epsilon) {
    const double r_lo = 0.14 * tile, r_hi = 0.18 * tile;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const double ra = uniform_range(rng, r_lo, r_hi);
        const double rb = uniform_range(rng, r_lo, r_hi);
        const double jitter_y = uniform_range(rng, -0.04, 0.04) * tile;
        Ring ring_a = random_convex_ring(rng, center - Point2{0.26 * tile, 0.0}, ra);
        Ring ring_b =
            random_convex_ring(rng, center + Point2{0.26 * tile, jitter_y}, rb);
        const Region reg_a("gen.a", ring_a);
        const Region reg_b("gen.b", ring_b);

        switch (kind) {
            case PairKind::overlapping: {
                // Slide b onto a until the interiors genuinely overlap.
                const Point2 pull = (reg_a.measures().centroid - reg_b.measures().centroid) * 0.6;
                Ring moved = translated_ring(ring_b, pull);
                const Region reg_m("gen.b", moved);
                if (intersection_area(reg_a, reg_m) > 1e-9) return {ring_a, moved};
                break;
            }
            case PairKind::touching: {
                // Exact vertex contact: b's leftmost vertex lands on a's
                // rightmost vertex; the halves stay in opposite half-planes.
                const Point2 va = ring_a[extreme_vertex(ring_a, +1.0)];
                const Point2 vb = ring_b[extreme_vertex(ring_b, -1.0)];
                Ring moved = translated_ring(ring_b, va - vb);
                const Region reg_m("gen.b", moved);
                if (cech_distance(reg_a, reg_m) <= epsilon &&
                    intersection_area(reg_a, reg_m) <= 1e-12)
                    return {ring_a, moved};
                break;
            }
            case PairKind::narrow_gap: {
                // Close along the witness direction to a gap of 1.5 epsilon;
                // minimum distance shrinks exactly linearly on that path.
                const double d0 = cech_distance(reg_a, reg_b);
                if (d0 <= 4.0 * epsilon) break;
                const auto [pa, pb] = closest_points(reg_a, reg_b);
                const double target = 1.5 * epsilon;
                const Point2 shift = (pa - pb) * (1.0 - target / d0);
                Ring moved = translated_ring(ring_b, shift);
                const Region reg_m("gen.b", moved);
                const double d = cech_distance(reg_a, reg_m);
                if (d > epsilon && d <= 2.0 * epsilon) return {ring_a, moved};
                break;
            }
            case PairKind::well_separated: {
                if (cech_distance(reg_a, reg_b) > 2.0 * epsilon) return {ring_a, ring_b};
                break;
            }
        }
    }
    raise(ErrorKind::internal, "scene generator could not realize a pair class");
}

} // namespace

SampledScene sample_scene(const GeneratorOptions& opt) {
    if (opt.region_count < 2) raise(ErrorKind::parameter, "scene needs at least two regions");
    std::mt19937_64 rng(opt.seed);

    const int pairs_per_class = std::max(1, opt.region_count / 8);
    const int constructed = 8 * pairs_per_class;
    const int free_regions = std::max(0, opt.region_count - constructed);
    const int units = 4 * pairs_per_class + free_regions;
    const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(units))));
    const double tile = std::min(opt.box.width(), opt.box.height()) / side;

    const std::array<std::array<double, 3>, 4> palette{{{0.9, 0.1, 0.1},
                                                        {0.1, 0.8, 0.2},
                                                        {0.15, 0.3, 0.85},
                                                        {0.9, 0.8, 0.1}}};
    auto color_features = [&](int which) {
        const auto& c = palette[static_cast<std::size_t>(which)];
        return FeatureMap{{"red", c[0]}, {"green", c[1]}, {"blue", c[2]}};
    };

    std::vector<Region> regions;
    SampledScene out{Scene(opt.box, opt.epsilon, opt.cell_size, {}, {}), {}, {}, {}, {}};

    int next_id = 0;
    auto fresh_id = [&]() { return "r" + std::to_string(next_id++); };
    int unit = 0;
    auto tile_center = [&]() {
        const int row = unit / side, col = unit % side;
        ++unit;
        return Point2{opt.box.lo.x + (col + 0.5) * tile, opt.box.lo.y + (row + 0.5) * tile};
    };

    const std::array<PairKind, 4> kinds{PairKind::overlapping, PairKind::touching,
                                        PairKind::narrow_gap, PairKind::well_separated};
    for (int p = 0; p < pairs_per_class; ++p) {
        for (PairKind kind : kinds) {
            const BuiltPair built = build_pair(rng, kind, tile_center(), tile, opt.epsilon);
            // Matching colors on overlapping pairs (and on one separated pair
            // per round) guarantee descriptive matches in every scene.
            int ca = uniform_int(rng, 0, 3);
            int cb = uniform_int(rng, 0, 3);
            if (kind == PairKind::overlapping || kind == PairKind::well_separated) cb = ca;
            const std::string ida = fresh_id();
            const std::string idb = fresh_id();
            regions.emplace_back(ida, built.a, std::vector<Ring>{}, false, color_features(ca));
            regions.emplace_back(idb, built.b, std::vector<Ring>{}, false, color_features(cb));
            switch (kind) {
                case PairKind::overlapping: out.overlapping.push_back({ida, idb}); break;
                case PairKind::touching: out.touching.push_back({ida, idb}); break;
                case PairKind::narrow_gap: out.narrow_gap.push_back({ida, idb}); break;
                case PairKind::well_separated: out.well_separated.push_back({ida, idb}); break;
            }
        }
    }
    for (int f = 0; f < free_regions; ++f) {
        const Point2 c = tile_center();
        const double r = uniform_range(rng, 0.14 * tile, 0.2 * tile);
        regions.emplace_back(fresh_id(), random_convex_ring(rng, c, r), std::vector<Ring>{},
                             false, color_features(uniform_int(rng, 0, 3)));
    }
    if (opt.include_universe) {
        const auto corners = opt.box.corners();
        regions.emplace_back("X", Ring(corners.begin(), corners.end()), std::vector<Ring>{},
                             false, color_features(0));
    }

    ProbeRegistry registry;
    registry.tolerance = 1e-6;
    registry.probes = {{"red", ProbeKind::color_r},
                       {"green", ProbeKind::color_g},
                       {"blue", ProbeKind::color_b}};
    out.scene = Scene(opt.box, opt.epsilon, opt.cell_size, std::move(registry),
                      std::move(regions));
    return out;
}

} // namespace proxregio
