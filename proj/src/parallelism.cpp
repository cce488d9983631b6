#include "proxregio/parallelism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "proxregio/errors.hpp"
#include "proxregio/proximity.hpp"

namespace proxregio {

namespace {

Point2 unit_or_raise(Point2 v, const char* what) {
    const double n = norm(v);
    if (n <= 0.0) raise(ErrorKind::parameter, std::string(what) + ": zero direction");
    return v * (1.0 / n);
}

// Angle between directions mod pi (lines have no orientation).
double line_angle_gap(Point2 u, Point2 v) {
    const double s = std::abs(cross(u, v));
    const double c = std::abs(dot(u, v));
    return std::atan2(s, c);
}

// The spine's supporting line clipped to the box shrunk by `inset` (plus a
// hair of slack), so a round cap of that radius stays strictly inside.
std::pair<Point2, Point2> extend_to_box(Point2 p0, Point2 p1, const Box& box, double inset) {
    const Point2 u = unit_or_raise(p1 - p0, "extend_to_box");
    const double reach = 2.0 * box.diagonal();
    Point2 a = p0 - u * reach;
    Point2 b = p1 + u * reach;
    const double margin = inset + 1e-7 * box.diagonal();
    const Box inner{{box.lo.x + margin, box.lo.y + margin},
                    {box.hi.x - margin, box.hi.y - margin}};
    if (!clip_segment_to_box(a, b, inner))
        raise(ErrorKind::precondition, "line extension misses the scene box");
    return {a, b};
}

} // namespace

PhysicalLine make_line(const std::string& id, Point2 p0, Point2 p1, double width,
                       const Scene& scene) {
    if (width <= 0.0) raise(ErrorKind::parameter, "line width must be positive");
    if (dist(p0, p1) <= 1e-12) raise(ErrorKind::invalid_spine, "line spine endpoints coincide");
    PhysicalLine line{id, p0, p1, width, Region(id, capsule_ring(p0, p1, width / 2.0))};
    const double slack = 1e-9 * scene.box().diagonal();
    for (const Point2& p : line.region.outer())
        if (!scene.box().contains(p, slack))
            raise(ErrorKind::precondition, "line '" + id + "' band leaves the scene box");
    return line;
}

const char* parallel_kind_name(ParallelKind k) {
    switch (k) {
        case ParallelKind::local: return "local";
        case ParallelKind::proximal: return "proximal";
        case ParallelKind::descriptive: return "descriptive";
        case ParallelKind::class_level: return "class_level";
    }
    return "?";
}

ParallelVerdict locally_parallel(const PhysicalLine& a, const PhysicalLine& b, double tol_angle) {
    ParallelVerdict v;
    v.kind = ParallelKind::local;
    const Point2 ua = unit_or_raise(a.p1 - a.p0, "locally_parallel");
    const Point2 ub = unit_or_raise(b.p1 - b.p0, "locally_parallel");
    if (line_angle_gap(ua, ub) > tol_angle) {
        v.note = "spine directions differ";
        return v;
    }
    // A right-angle transversal exists iff the spines' projections onto the
    // common direction overlap; it then crosses both at 90 degrees.
    const double a0 = dot(a.p0, ua), a1 = dot(a.p1, ua);
    const double b0 = dot(b.p0, ua), b1 = dot(b.p1, ua);
    const double lo = std::max(std::min(a0, a1), std::min(b0, b1));
    const double hi = std::min(std::max(a0, a1), std::max(b0, b1));
    if (lo > hi) {
        v.note = "no common perpendicular crosses both spines";
        return v;
    }
    const double t = (lo + hi) / 2.0;
    auto on_spine = [&](Point2 p, Point2 dir, double tp) {
        const double base = dot(p, dir);
        return p + dir * (tp - base);
    };
    v.transversal = {{on_spine(a.p0, ua, t), on_spine(b.p0, ua, t)}};
    v.holds = true;
    return v;
}

ParallelVerdict proximal_parallel(const PhysicalLine& a, const PhysicalLine& b,
                                  const Scene& scene) {
    ParallelVerdict v;
    v.kind = ParallelKind::proximal;
    const double ra = a.width / 2.0, rb = b.width / 2.0;
    const auto [ea0, ea1] = extend_to_box(a.p0, a.p1, scene.box(), ra);
    const auto [eb0, eb1] = extend_to_box(b.p0, b.p1, scene.box(), rb);
    const Region ext_a(a.id + ".extended", capsule_ring(ea0, ea1, ra));
    const Region ext_b(b.id + ".extended", capsule_ring(eb0, eb1, rb));
    v.gap = cech_distance(ext_a, ext_b);
    const RelationVerdict sf = strongly_far(ext_a, ext_b, scene);
    v.holds = sf.holds;
    if (!v.holds) v.note = "extended bands are not strongly far";
    return v;
}

Region sweep_region(const Region& r, Point2 direction, const Box& box, const std::string& id,
                    bool* conservative) {
    const Point2 u = unit_or_raise(direction, "sweep_region");
    const bool hulled = r.is_hole_region() || !is_convex(r);
    if (conservative) *conservative = hulled;
    const Ring base = hulled ? convex_hull(r.outer()) : r.outer();
    const double reach = 2.0 * box.diagonal();
    Ring swept;
    swept.reserve(base.size() * 2);
    for (const Point2& p : base) swept.push_back(p + u * reach);
    for (const Point2& p : base) swept.push_back(p - u * reach);
    Ring hull = convex_hull(swept);
    Ring clipped = simplify_ring(clip_ring_to_box(hull, box));
    if (clipped.size() < 3) raise(ErrorKind::precondition, "sweep of '" + r.id() + "' misses the box");
    return Region(id, clipped);
}

ParallelVerdict parallel_regions(const Region& a, const Region& b, const Scene& scene,
                                 Point2 direction) {
    ParallelVerdict v;
    v.kind = ParallelKind::proximal;
    bool ca = false, cb = false;
    const Region sa = sweep_region(a, direction, scene.box(), a.id() + ".swept", &ca);
    const Region sb = sweep_region(b, direction, scene.box(), b.id() + ".swept", &cb);
    v.conservative = ca || cb;
    v.gap = cech_distance(sa, sb);
    const RelationVerdict sf = strongly_far(sa, sb, scene);
    v.holds = sf.holds;
    if (!v.holds) {
        v.failing_pair = {{a.id(), b.id()}};
        v.note = "swept extensions are not strongly far";
    }
    return v;
}

ParallelVerdict descriptively_parallel(const Region& a, const Region& b, const Scene& scene,
                                       const ProbeRegistry& reg, Point2 direction) {
    ParallelVerdict v = parallel_regions(a, b, scene, direction);
    v.kind = ParallelKind::descriptive;
    if (!v.holds) return v;
    const RelationVerdict dn = dnear(a, b, scene, reg);
    if (!dn.holds) {
        v.holds = false;
        v.failing_pair = {{a.id(), b.id()}};
        v.note = "extensions are strongly far but descriptions do not match";
        return v;
    }
    v.note = "spatially parallel with matching descriptions";
    return v;
}

ParallelVerdict classes_parallel(const RegionClass& ca, const RegionClass& cb, const Scene& scene,
                                 const ProbeRegistry& reg, Point2 direction, bool descriptive) {
    std::set<std::string> members_a(ca.members.begin(), ca.members.end());
    for (const std::string& m : cb.members)
        if (members_a.count(m))
            raise(ErrorKind::precondition, "classes share member '" + m + "'");
    ParallelVerdict v;
    v.kind = ParallelKind::class_level;
    v.holds = true;
    double min_gap = std::numeric_limits<double>::infinity();
    for (const std::string& ma : ca.members) {
        for (const std::string& mb : cb.members) {
            const Region& ra = scene.find_region(ma);
            const Region& rb = scene.find_region(mb);
            const ParallelVerdict pv = descriptive
                                           ? descriptively_parallel(ra, rb, scene, reg, direction)
                                           : parallel_regions(ra, rb, scene, direction);
            v.conservative = v.conservative || pv.conservative;
            if (pv.gap) min_gap = std::min(min_gap, *pv.gap);
            if (!pv.holds) {
                v.holds = false;
                v.failing_pair = {{ma, mb}};
                v.note = pv.note;
                return v;
            }
        }
    }
    if (std::isfinite(min_gap)) v.gap = min_gap;
    return v;
}

} // namespace proxregio
