#include "proxregio/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxregio/errors.hpp"

namespace proxregio {

namespace {

std::vector<const Region*> resolve_group(const RegionGroup& g, const Scene& scene) {
    std::vector<const Region*> out;
    out.reserve(g.size());
    for (const std::string& id : g) out.push_back(&scene.find_region(id));
    return out;
}

bool group_has_universe(const std::vector<const Region*>& g, const Scene& scene) {
    for (const Region* r : g)
        if (scene.is_universe(*r)) return true;
    return false;
}

// Positive-area threshold: far above clipping noise, far below any real overlap.
double area_noise(const Region& a, const Region& b) {
    return 1e-12 * std::max({1.0, a.measures().area, b.measures().area});
}

double length_noise(const Scene& scene, const Region& a, const Region& b) {
    return std::max(scene.epsilon(), 1e-12 * std::max({1.0, a.measures().diameter,
                                                       b.measures().diameter}));
}

} // namespace

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::near: return "near";
        case Relation::strongly_near: return "strongly_near";
        case Relation::far: return "far";
        case Relation::strongly_far: return "strongly_far";
        case Relation::descriptively_near: return "descriptively_near";
        case Relation::descriptively_strongly_near: return "descriptively_strongly_near";
    }
    return "?";
}

namespace {

using RegionPtrs = std::vector<const Region*>;

double cech_distance_impl(const RegionPtrs& ga, const RegionPtrs& gb) {
    double best = std::numeric_limits<double>::infinity();
    for (const Region* ra : ga)
        for (const Region* rb : gb) best = std::min(best, cech_distance(*ra, *rb));
    return best;
}

RelationVerdict near_impl(const RegionPtrs& ga, const RegionPtrs& gb, const Scene& scene) {
    RelationVerdict v;
    v.relation = Relation::near;
    const double d = cech_distance_impl(ga, gb);
    v.gap = std::isfinite(d) ? std::optional<double>(d) : std::nullopt;
    v.holds = d <= scene.epsilon();
    return v;
}

RelationVerdict strongly_near_impl(const RegionPtrs& ga, const RegionPtrs& gb,
                                   const Scene& scene) {
    RelationVerdict v;
    v.relation = Relation::strongly_near;
    if (ga.empty() || gb.empty()) return v;  // nothing is strongly near the empty set
    // The universe is strongly near everything (axiomatic clause for X).
    if (group_has_universe(ga, scene) || group_has_universe(gb, scene)) {
        v.holds = true;
        const Region* other = group_has_universe(ga, scene) ? gb.front() : ga.front();
        v.shared_point = other->measures().centroid;
        return v;
    }
    for (const Region* ra : ga) {
        for (const Region* rb : gb) {
            if (intersection_area(*ra, *rb) > area_noise(*ra, *rb)) {
                if (auto p = interior_overlap_point(*ra, *rb)) {
                    v.holds = true;
                    v.shared_point = p;
                    v.shared_cell = scene.key_of(*p);
                    return v;
                }
            }
            Point2 w0, w1;
            if (shared_boundary_length(*ra, *rb, &w0, &w1) > length_noise(scene, *ra, *rb)) {
                v.holds = true;
                v.shared_segment = std::make_pair(w0, w1);
                v.shared_cell = scene.key_of((w0 + w1) * 0.5);
                return v;
            }
        }
    }
    return v;
}

// Builds and verifies the EF separator for one region: a dilation C of the
// region, kept inside the box, with D(a, X\C) > eps and D(C, b-side) > eps.
std::optional<Region> separator_for(const Region& a, const std::vector<const Region*>& others,
                                    double gap, const Scene& scene) {
    const double eps = scene.epsilon();
    // The verification below accepts any radius above eps.  The inscribed-arc
    // sag shrinks the verified margin by a factor (1 - cos(pi / (2 * segs))),
    // so near-threshold gaps get progressively finer arcs; halving retries
    // cover offsets that fold over on concave inputs.
    for (double radius = gap / 2.0; radius > eps; radius /= 2.0) {
      for (int segs : {kArcSegmentsPerQuarter, 64, 1024}) {
        std::optional<DilationResult> d;
        try {
            d = dilate(a, radius, scene.box(), segs);
        } catch (const Error&) {
            continue;
        }
        const Region& c = d->region;
        // D(a, X\C): a point of the box outside C is separated from a by at
        // least the distance from a's rings to the reachable part of C's
        // boundary (hole rings included; outer segments lying on the box edge
        // excluded, since the complement stops at the box), provided a lies
        // inside C.  Both rings may have been clipped by the same box plane,
        // so membership tolerates coordinate noise up to `slack` and the
        // complement gap must clear eps by the same margin.
        const double slack = 1e-9 * scene.box().diagonal();
        bool a_inside = true;
        for (const Point2& p : a.outer())
            if (!c.strictly_inside(p, 0.0) && c.boundary_distance(p) > slack) a_inside = false;
        if (!a_inside) continue;
        double complement_gap = std::numeric_limits<double>::infinity();
        const auto c_rings = c.rings();
        for (std::size_t ri = 0; ri < c_rings.size(); ++ri) {
            const Ring& ring = *c_rings[ri];
            for (std::size_t i = 0; i < ring.size(); ++i) {
                const Point2 p = ring[i];
                const Point2 q = ring[(i + 1) % ring.size()];
                const bool on_box =
                    ri == 0 &&
                    ((std::abs(p.x - scene.box().lo.x) <= slack && std::abs(q.x - scene.box().lo.x) <= slack) ||
                     (std::abs(p.x - scene.box().hi.x) <= slack && std::abs(q.x - scene.box().hi.x) <= slack) ||
                     (std::abs(p.y - scene.box().lo.y) <= slack && std::abs(q.y - scene.box().lo.y) <= slack) ||
                     (std::abs(p.y - scene.box().hi.y) <= slack && std::abs(q.y - scene.box().hi.y) <= slack));
                if (on_box) continue;  // the complement does not reach past a clipped edge
                for (const Ring* ra : a.rings()) {
                    const std::size_t n = ra->size();
                    for (std::size_t k = 0; k < n; ++k)
                        complement_gap = std::min(
                            complement_gap, segment_distance(p, q, (*ra)[k], (*ra)[(k + 1) % n]));
                }
            }
        }
        if (complement_gap <= eps + slack) continue;
        bool separated = true;
        for (const Region* rb : others) {
            if (cech_distance(c, *rb) <= eps) {
                separated = false;
                break;
            }
        }
        if (separated) return c;
      }
    }
    return std::nullopt;
}

RelationVerdict strongly_far_impl(const RegionPtrs& ga, const RegionPtrs& gb,
                                  const Scene& scene) {
    RelationVerdict v;
    v.relation = Relation::strongly_far;
    const double d = cech_distance_impl(ga, gb);
    v.gap = std::isfinite(d) ? std::optional<double>(d) : std::nullopt;
    if (!(d > 2.0 * scene.epsilon()) || !std::isfinite(d)) {
        v.holds = false;
        return v;
    }
    // One dilated piece per member of a; the union of the pieces is the
    // separator C.  Each piece is verified against both EF conditions, which
    // makes the union verdict sound.
    for (const Region* ra : ga) {
        double gap_a = std::numeric_limits<double>::infinity();
        for (const Region* rb : gb) gap_a = std::min(gap_a, cech_distance(*ra, *rb));
        auto c = separator_for(*ra, gb, gap_a, scene);
        if (!c)
            raise(ErrorKind::internal,
                  "strongly_far: separator construction failed for '" + ra->id() + "'");
        v.separator.push_back(std::move(*c));
    }
    v.holds = true;
    return v;
}

} // namespace

double cech_distance(const RegionGroup& a, const RegionGroup& b, const Scene& scene) {
    return cech_distance_impl(resolve_group(a, scene), resolve_group(b, scene));
}

RelationVerdict near(const RegionGroup& a, const RegionGroup& b, const Scene& scene) {
    return near_impl(resolve_group(a, scene), resolve_group(b, scene), scene);
}

RelationVerdict far(const RegionGroup& a, const RegionGroup& b, const Scene& scene) {
    RelationVerdict v = near(a, b, scene);
    v.relation = Relation::far;
    v.holds = !v.holds;
    return v;
}

RelationVerdict strongly_near(const RegionGroup& a, const RegionGroup& b, const Scene& scene) {
    return strongly_near_impl(resolve_group(a, scene), resolve_group(b, scene), scene);
}

RelationVerdict strongly_far(const RegionGroup& a, const RegionGroup& b, const Scene& scene) {
    return strongly_far_impl(resolve_group(a, scene), resolve_group(b, scene), scene);
}

RelationVerdict descriptively_near(const RegionGroup& a, const RegionGroup& b, const Scene& scene,
                                   const ProbeRegistry& reg) {
    RelationVerdict v;
    v.relation = Relation::descriptively_near;
    if (a.empty() || b.empty()) return v;
    auto cells = descriptive_intersection(a, b, scene, reg);
    if (!cells.empty()) {
        v.holds = true;
        v.shared_cell = cells.front().index;
        v.shared_point = cells.front().representative;
    }
    return v;
}

namespace {

bool vector_in(const FeatureVector& v, const std::vector<FeatureVector>& set, double tol) {
    for (const FeatureVector& u : set)
        if (features_match(v, u, tol)) return true;
    return false;
}

} // namespace

RelationVerdict descriptively_strongly_near(const RegionGroup& a, const RegionGroup& b,
                                            const Scene& scene, const ProbeRegistry& reg) {
    RelationVerdict v;
    v.relation = Relation::descriptively_strongly_near;
    if (a.empty() || b.empty()) return v;
    const auto ga = resolve_group(a, scene);
    const auto gb = resolve_group(b, scene);
    if (group_has_universe(ga, scene) || group_has_universe(gb, scene)) {
        v.holds = true;
        return v;
    }
    const auto ia = interior_description_set(a, scene, reg);
    const auto ib = interior_description_set(b, scene, reg);
    for (const FeatureVector& d : ia) {
        if (vector_in(d, ib, reg.tolerance)) {
            v.holds = true;
            break;
        }
    }
    return v;
}

// The single-region spatial overloads evaluate the regions directly, so they
// also work on constructed regions that are not registered in the scene.
RelationVerdict near(const Region& a, const Region& b, const Scene& scene) {
    return near_impl({&a}, {&b}, scene);
}
RelationVerdict far(const Region& a, const Region& b, const Scene& scene) {
    RelationVerdict v = near_impl({&a}, {&b}, scene);
    v.relation = Relation::far;
    v.holds = !v.holds;
    return v;
}
RelationVerdict strongly_near(const Region& a, const Region& b, const Scene& scene) {
    return strongly_near_impl({&a}, {&b}, scene);
}
RelationVerdict strongly_far(const Region& a, const Region& b, const Scene& scene) {
    return strongly_far_impl({&a}, {&b}, scene);
}
namespace {

// Cell bookkeeping that also covers regions not registered in the scene: the
// grid of an unregistered region is decomposed on the fly, and its own
// description rides on each of its cells alongside the descriptions of any
// registered regions sharing the cell key.
struct LooseCells {
    const Region* region = nullptr;
    bool registered = false;
    RegionGrid local;

    const RegionGrid& grid(const Scene& scene) const {
        return registered ? scene.grid_of(region->id()) : local;
    }
};

LooseCells loose_cells(const Region& r, const Scene& scene) {
    LooseCells lc;
    lc.region = &r;
    lc.registered = scene.try_find_region(r.id()) == &r;
    if (!lc.registered) lc.local = subregion_grid(r, scene.cell_size(), scene.box());
    return lc;
}

std::vector<FeatureVector> loose_cell_descriptions(const LooseCells& lc, CellKey key,
                                                   const Scene& scene, const ProbeRegistry& reg) {
    std::vector<FeatureVector> out;
    if (!lc.registered) out.push_back(describe(*lc.region, reg));
    for (std::size_t idx : scene.covering(key)) out.push_back(describe(scene.region_at(idx), reg));
    return out;
}

std::vector<FeatureVector> loose_description_set(const LooseCells& lc, const Scene& scene,
                                                 const ProbeRegistry& reg, bool interior_only) {
    std::vector<FeatureVector> out;
    if (interior_only) {
        if (lc.region->is_hole_region()) return out;
        if (lc.grid(scene).interior_count == 0) {
            out.push_back(describe(*lc.region, reg));
            return out;
        }
    }
    for (const SubregionCell& cell : lc.grid(scene).cells) {
        if (interior_only && !cell.interior_cell) continue;
        auto ds = loose_cell_descriptions(lc, cell.index, scene, reg);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    std::sort(out.begin(), out.end(),
              [](const FeatureVector& a, const FeatureVector& b) { return a.values < b.values; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

RelationVerdict dnear(const Region& a, const Region& b, const Scene& scene,
                      const ProbeRegistry& reg) {
    if (scene.try_find_region(a.id()) == &a && scene.try_find_region(b.id()) == &b)
        return descriptively_near(RegionGroup{a.id()}, RegionGroup{b.id()}, scene, reg);
    RelationVerdict v;
    v.relation = Relation::descriptively_near;
    const LooseCells la = loose_cells(a, scene);
    const LooseCells lb = loose_cells(b, scene);
    const auto da = loose_description_set(la, scene, reg, false);
    const auto db = loose_description_set(lb, scene, reg, false);
    for (const LooseCells* side : {&la, &lb}) {
        for (const SubregionCell& cell : side->grid(scene).cells) {
            for (const FeatureVector& d : loose_cell_descriptions(*side, cell.index, scene, reg)) {
                if (vector_in(d, da, reg.tolerance) && vector_in(d, db, reg.tolerance)) {
                    v.holds = true;
                    v.shared_cell = cell.index;
                    v.shared_point = cell.representative;
                    return v;
                }
            }
        }
    }
    return v;
}
RelationVerdict dsnear(const Region& a, const Region& b, const Scene& scene,
                       const ProbeRegistry& reg) {
    if (scene.try_find_region(a.id()) == &a && scene.try_find_region(b.id()) == &b)
        return descriptively_strongly_near(RegionGroup{a.id()}, RegionGroup{b.id()}, scene, reg);
    RelationVerdict v;
    v.relation = Relation::descriptively_strongly_near;
    if (scene.is_universe(a) || scene.is_universe(b)) {
        v.holds = true;
        return v;
    }
    const LooseCells la = loose_cells(a, scene);
    const LooseCells lb = loose_cells(b, scene);
    const auto ia = loose_description_set(la, scene, reg, true);
    const auto ib = loose_description_set(lb, scene, reg, true);
    for (const FeatureVector& d : ia) {
        if (vector_in(d, ib, reg.tolerance)) {
            v.holds = true;
            break;
        }
    }
    return v;
}

ProximalRelator default_relator() {
    return {{Relation::near, Relation::strongly_near, Relation::far, Relation::strongly_far}};
}

RelatorReport relator_eval(const ProximalRelator& relator, const RegionGroup& a,
                           const RegionGroup& b, const Scene& scene) {
    RelatorReport report;
    for (Relation r : relator.relations) {
        switch (r) {
            case Relation::near: report.verdicts.push_back(near(a, b, scene)); break;
            case Relation::far: report.verdicts.push_back(far(a, b, scene)); break;
            case Relation::strongly_near:
                report.verdicts.push_back(strongly_near(a, b, scene));
                break;
            case Relation::strongly_far:
                report.verdicts.push_back(strongly_far(a, b, scene));
                break;
            case Relation::descriptively_near:
                report.verdicts.push_back(descriptively_near(a, b, scene, scene.registry()));
                break;
            case Relation::descriptively_strongly_near:
                report.verdicts.push_back(
                    descriptively_strongly_near(a, b, scene, scene.registry()));
                break;
        }
    }
    // Implication check: strongly near must entail near.
    bool sn = false, n = false, n_present = false;
    for (const RelationVerdict& v : report.verdicts) {
        if (v.relation == Relation::strongly_near && v.holds) sn = true;
        if (v.relation == Relation::near) {
            n_present = true;
            n = v.holds;
        }
    }
    if (sn && n_present && !n) {
        report.implication_violation = true;
        report.note = "strongly_near held while near failed";
    }
    return report;
}

} // namespace proxregio
