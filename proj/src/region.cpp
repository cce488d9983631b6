#include "proxregio/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxregio/errors.hpp"

namespace proxregio {

namespace {

void validate_ring(const Ring& ring, const std::string& id, const char* label) {
    if (ring.size() < 3)
        raise(ErrorKind::invalid_region, "region '" + id + "': " + label + " needs >= 3 vertices");
    const double scale = std::max(1.0, ring_bbox(ring).diagonal());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2 a = ring[i];
        const Point2 b = ring[(i + 1) % ring.size()];
        if (dist(a, b) <= 1e-12 * scale)
            raise(ErrorKind::invalid_region,
                  "region '" + id + "': " + label + " has duplicate consecutive vertices");
    }
    if (std::abs(ring_signed_area(ring)) <= 1e-12 * scale * scale)
        raise(ErrorKind::invalid_region, "region '" + id + "': " + label + " has (near-)zero area");
    if (!ring_is_simple(ring))
        raise(ErrorKind::invalid_region, "region '" + id + "': " + label + " self-intersects");
}

bool point_in_solid(const Ring& outer, const std::vector<Ring>& holes, Point2 p) {
    if (!ring_contains(outer, p)) return false;
    for (const Ring& h : holes)
        if (ring_contains(h, p)) return false;
    return true;
}

} // namespace

Region::Region(std::string id, Ring outer, std::vector<Ring> holes, bool is_hole_region,
               FeatureMap features)
    : id_(std::move(id)),
      outer_(std::move(outer)),
      holes_(std::move(holes)),
      is_hole_region_(is_hole_region),
      features_(std::move(features)) {
    validate_ring(outer_, id_, "outer ring");
    if (!ring_is_ccw(outer_)) outer_ = reversed_ring(outer_);
    for (Ring& h : holes_) {
        validate_ring(h, id_, "hole ring");
        if (ring_is_ccw(h)) h = reversed_ring(h);
        for (const Point2& p : h)
            if (!ring_contains(outer_, p) && ring_boundary_distance(outer_, p) > 1e-12)
                raise(ErrorKind::invalid_region, "region '" + id_ + "': hole outside outer ring");
    }
    for (std::size_t i = 0; i < holes_.size(); ++i)
        for (std::size_t j = i + 1; j < holes_.size(); ++j)
            for (const Point2& p : holes_[j])
                if (ring_contains(holes_[i], p))
                    raise(ErrorKind::invalid_region, "region '" + id_ + "': holes overlap");

    bbox_ = ring_bbox(outer_);

    const double outer_area = ring_signed_area(outer_);  // positive, ring is CCW
    double hole_area = 0.0;
    double hole_len = 0.0;
    for (const Ring& h : holes_) {
        hole_area += std::abs(ring_signed_area(h));
        hole_len += ring_perimeter(h);
    }
    const double outer_len = ring_perimeter(outer_);

    if (is_hole_region_) {
        // Wireframe: the region is its boundary; report boundary length as area.
        measures_.area = outer_len + hole_len;
        measures_.perimeter = outer_len + hole_len;
        measures_.centroid = ring_length_centroid(outer_);
    } else {
        measures_.area = outer_area - hole_area;
        measures_.perimeter = outer_len + hole_len;
        measures_.centroid = ring_area_centroid(outer_);
        if (measures_.area <= 0.0)
            raise(ErrorKind::invalid_region, "region '" + id_ + "': holes consume the whole area");
        tri_outer_ = triangulate(outer_);
        for (const Ring& h : holes_) tri_holes_.push_back(triangulate(reversed_ring(h)));
    }
    double diam = 0.0;
    for (std::size_t i = 0; i < outer_.size(); ++i)
        for (std::size_t j = i + 1; j < outer_.size(); ++j)
            diam = std::max(diam, dist(outer_[i], outer_[j]));
    measures_.diameter = diam;
}

std::vector<const Ring*> Region::rings() const {
    std::vector<const Ring*> out;
    out.push_back(&outer_);
    for (const Ring& h : holes_) out.push_back(&h);
    return out;
}

double Region::boundary_distance(Point2 p) const {
    double best = ring_boundary_distance(outer_, p);
    for (const Ring& h : holes_) best = std::min(best, ring_boundary_distance(h, p));
    return best;
}

bool Region::contains(Point2 p, double boundary_eps) const {
    if (boundary_distance(p) <= boundary_eps) return true;
    if (is_hole_region_) return false;  // wireframe closure is the boundary alone
    return point_in_solid(outer_, holes_, p);
}

bool Region::strictly_inside(Point2 p, double boundary_eps) const {
    if (is_hole_region_) return false;
    if (boundary_distance(p) <= boundary_eps) return false;
    return point_in_solid(outer_, holes_, p);
}

Region Region::with_id(std::string new_id) const {
    return Region(std::move(new_id), outer_, holes_, is_hole_region_, features_);
}

Region Region::translated(Point2 delta, std::string new_id) const {
    Ring outer = outer_;
    for (Point2& p : outer) p = p + delta;
    std::vector<Ring> holes = holes_;
    for (Ring& h : holes)
        for (Point2& p : h) p = p + delta;
    return Region(std::move(new_id), std::move(outer), std::move(holes), is_hole_region_, features_);
}

Measures measure(const Region& r) { return r.measures(); }

PartMembership part_membership(const Region& r, Point2 p, double eps) {
    if (r.boundary_distance(p) <= eps) return PartMembership::boundary;
    if (!r.is_hole_region() && r.strictly_inside(p, eps)) return PartMembership::interior;
    return PartMembership::exterior;
}

bool is_convex(const Region& r) {
    return !r.is_hole_region() && r.holes().empty() && ring_is_convex(r.outer());
}

double hausdorff_upper_bound(const Region& a, const Region& b) {
    double worst = 0.0;
    for (const Point2& p : a.outer())
        for (const Point2& q : b.outer()) worst = std::max(worst, dist(p, q));
    return worst;
}

double cech_distance(const Region& a, const Region& b) {
    // Containment: a vertex of one region inside the solid part of the other.
    if (!b.is_hole_region() && b.strictly_inside(a.outer().front(), 0.0)) return 0.0;
    if (!a.is_hole_region() && a.strictly_inside(b.outer().front(), 0.0)) return 0.0;
    double best = std::numeric_limits<double>::max();
    for (const Ring* ra : a.rings()) {
        const std::size_t n = ra->size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a1 = (*ra)[i];
            const Point2 a2 = (*ra)[(i + 1) % n];
            for (const Ring* rb : b.rings()) {
                const std::size_t m = rb->size();
                for (std::size_t j = 0; j < m; ++j) {
                    best = std::min(best, segment_distance(a1, a2, (*rb)[j], (*rb)[(j + 1) % m]));
                    if (best == 0.0) return 0.0;
                }
            }
        }
    }
    return best;
}

double intersection_area(const Region& a, const Region& b) {
    if (a.is_hole_region() || b.is_hole_region()) return 0.0;
    const Box& ba = a.bbox();
    const Box& bb = b.bbox();
    if (ba.hi.x < bb.lo.x || bb.hi.x < ba.lo.x || ba.hi.y < bb.lo.y || bb.hi.y < ba.lo.y)
        return 0.0;
    // Indicator algebra: 1_A = 1_outer - sum 1_hole, so the intersection area
    // expands into signed pairwise terms.
    double acc = simple_rings_intersection_area(a.outer_triangles(), b.outer_triangles());
    for (const auto& th : b.hole_triangles())
        acc -= simple_rings_intersection_area(a.outer_triangles(), th);
    for (const auto& ta : a.hole_triangles()) {
        acc -= simple_rings_intersection_area(ta, b.outer_triangles());
        for (const auto& th : b.hole_triangles())
            acc += simple_rings_intersection_area(ta, th);
    }
    return std::max(0.0, acc);
}

double shared_boundary_length(const Region& a, const Region& b, Point2* w0, Point2* w1) {
    double total = 0.0;
    double best_piece = 0.0;
    const double scale = std::max({1.0, a.bbox().diagonal(), b.bbox().diagonal()});
    for (const Ring* ra : a.rings()) {
        const std::size_t n = ra->size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a1 = (*ra)[i];
            const Point2 a2 = (*ra)[(i + 1) % n];
            double edge_overlap = 0.0;
            for (const Ring* rb : b.rings()) {
                const std::size_t m = rb->size();
                for (std::size_t j = 0; j < m; ++j) {
                    Point2 p0, p1;
                    const double len = collinear_overlap(a1, a2, (*rb)[j], (*rb)[(j + 1) % m],
                                                         &p0, &p1, 1e-9, 1e-9 * scale);
                    if (len > best_piece) {
                        best_piece = len;
                        if (w0) *w0 = p0;
                        if (w1) *w1 = p1;
                    }
                    edge_overlap = std::max(edge_overlap, len);
                }
            }
            total += edge_overlap;  // per a-edge, avoids double counting within b
        }
    }
    return total;
}

std::optional<Point2> interior_overlap_point(const Region& a, const Region& b) {
    if (a.is_hole_region() || b.is_hole_region()) return std::nullopt;
    double best_area = 0.0;
    std::optional<Point2> best;
    for (const Triangle& t : a.outer_triangles()) {
        const Ring rt{t[0], t[1], t[2]};
        for (const Triangle& u : b.outer_triangles()) {
            const Ring ru{u[0], u[1], u[2]};
            Ring piece = clip_ring_convex(rt, ru);
            if (piece.size() < 3) continue;
            const double area = std::abs(ring_signed_area(piece));
            if (area <= best_area) continue;
            const Point2 c = ring_area_centroid(piece);
            if (a.strictly_inside(c) && b.strictly_inside(c)) {
                best_area = area;
                best = c;
            }
        }
    }
    return best;
}

DilationResult dilate(const Region& r, double radius, const Box& box, int segments_per_quarter) {
    if (radius < 0.0) raise(ErrorKind::parameter, "dilate: negative radius");
    if (radius == 0.0) return {r.with_id(r.id()), false, false};
    if (r.is_hole_region())
        raise(ErrorKind::parameter, "dilate: wireframe regions have no interior to dilate");

    const std::string out_id = r.id() + "+dilated";
    auto finish = [&](Ring outer, std::vector<Ring> holes, bool conservative) -> DilationResult {
        bool clipped = false;
        for (const Point2& p : outer) {
            if (!box.contains(p, 1e-12)) {
                clipped = true;
                break;
            }
        }
        if (clipped) outer = simplify_ring(clip_ring_to_box(outer, box));
        if (outer.size() < 3 || !ring_is_simple(outer))
            raise(ErrorKind::internal, "dilate: clipped ring degenerated");
        return {Region(out_id, std::move(outer), std::move(holes), false, r.features()),
                clipped, conservative};
    };

    Ring outer = offset_ring_outward(r.outer(), radius, segments_per_quarter);
    std::vector<Ring> holes;
    for (const Ring& h : r.holes()) {
        // Shrink the hole: erode the (CCW-viewed) hole polygon by the radius.
        auto shrunk = offset_ring_inward(reversed_ring(h), radius, segments_per_quarter);
        if (shrunk) holes.push_back(reversed_ring(*shrunk));
    }
    if (outer.size() >= 3 && ring_is_simple(outer)) return finish(outer, holes, false);

    // Deep concavity made the offset fold over itself; fall back to the
    // convex hull, which always offsets cleanly.
    Ring hull = convex_hull(r.outer());
    if (hull.size() < 3) raise(ErrorKind::internal, "dilate: hull degenerated");
    Ring hull_outer = offset_ring_outward(hull, radius, segments_per_quarter);
    if (hull_outer.size() < 3 || !ring_is_simple(hull_outer))
        raise(ErrorKind::internal, "dilate: hull offset degenerated");
    return finish(hull_outer, {}, true);
}

Region convex_hull_region(const Region& r, const std::string& id) {
    Ring hull = convex_hull(r.outer());
    if (hull.size() < 3)
        raise(ErrorKind::invalid_region, "convex hull of '" + r.id() + "' is degenerate");
    return Region(id, std::move(hull), {}, false, r.features());
}

} // namespace proxregio
