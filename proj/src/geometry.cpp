#include "proxregio/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxregio/errors.hpp"

namespace proxregio {

double ring_signed_area(const Ring& r) {
    double acc = 0.0;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = r[i];
        const Point2& q = r[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    return acc / 2.0;
}

double ring_perimeter(const Ring& r) {
    double acc = 0.0;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) acc += dist(r[i], r[(i + 1) % n]);
    return acc;
}

Point2 ring_area_centroid(const Ring& r) {
    double a6 = 0.0;
    Point2 c{0.0, 0.0};
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = r[i];
        const Point2& q = r[(i + 1) % n];
        const double w = cross(p, q);
        a6 += w;
        c.x += (p.x + q.x) * w;
        c.y += (p.y + q.y) * w;
    }
    if (std::abs(a6) < 1e-300) return ring_length_centroid(r);
    return {c.x / (3.0 * a6), c.y / (3.0 * a6)};
}

Point2 ring_length_centroid(const Ring& r) {
    double len = 0.0;
    Point2 c{0.0, 0.0};
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = r[i];
        const Point2& q = r[(i + 1) % n];
        const double l = dist(p, q);
        len += l;
        c.x += (p.x + q.x) * 0.5 * l;
        c.y += (p.y + q.y) * 0.5 * l;
    }
    if (len < 1e-300) return r.empty() ? Point2{} : r.front();
    return {c.x / len, c.y / len};
}

Box ring_bbox(const Ring& r) {
    Box b{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
          {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
    for (const Point2& p : r) {
        b.lo.x = std::min(b.lo.x, p.x);
        b.lo.y = std::min(b.lo.y, p.y);
        b.hi.x = std::max(b.hi.x, p.x);
        b.hi.y = std::max(b.hi.y, p.y);
    }
    return b;
}

Ring reversed_ring(Ring r) {
    std::reverse(r.begin(), r.end());
    return r;
}

bool ring_is_ccw(const Ring& r) { return ring_signed_area(r) > 0.0; }

bool ring_is_convex(const Ring& r, double tol) {
    const std::size_t n = r.size();
    if (n < 3) return false;
    const double scale = std::max(1.0, ring_bbox(r).diagonal());
    const double eps = tol * scale * scale;
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = r[i];
        const Point2 b = r[(i + 1) % n];
        const Point2 c = r[(i + 2) % n];
        const double cr = cross(b - a, c - b);
        if (std::abs(cr) <= eps) continue;  // collinear triple is fine
        const int s = cr > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return sign != 0;
}

bool ring_is_simple(const Ring& r, double tol) {
    const std::size_t n = r.size();
    if (n < 3) return false;
    const double scale = std::max(1.0, ring_bbox(r).diagonal());
    const double eps = tol * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a1 = r[i];
        const Point2 a2 = r[(i + 1) % n];
        if (dist(a1, a2) <= eps) return false;  // duplicate consecutive vertices
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point2 b1 = r[j];
            const Point2 b2 = r[(j + 1) % n];
            if (adjacent) {
                // Neighbouring edges share exactly one endpoint; reject only
                // when they overlap beyond it (spike back along the same line).
                Point2 w0, w1;
                if (collinear_overlap(a1, a2, b1, b2, &w0, &w1, 1e-9, eps) > eps) return false;
                continue;
            }
            if (segment_distance(a1, a2, b1, b2) <= eps) return false;
        }
    }
    return true;
}

bool ring_contains(const Ring& r, Point2 p) {
    // Crossing-number test with the half-open rule.
    bool inside = false;
    const std::size_t n = r.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = r[i];
        const Point2 b = r[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double ring_boundary_distance(const Ring& r, Point2 p) {
    double best = std::numeric_limits<double>::max();
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, segment_point_distance(r[i], r[(i + 1) % n], p));
    return best;
}

Ring simplify_ring(const Ring& r, double tol) {
    if (r.size() < 3) return r;
    const double scale = std::max(1.0, ring_bbox(r).diagonal());
    const double dist_eps = tol * scale;
    const double area_eps = tol * scale * scale;
    Ring out;
    out.reserve(r.size());
    for (const Point2& p : r) {
        if (!out.empty() && dist(out.back(), p) <= dist_eps) continue;
        out.push_back(p);
    }
    while (out.size() >= 2 && dist(out.front(), out.back()) <= dist_eps) out.pop_back();
    // Remove collinear middle vertices (a, b, c with b on segment ac).
    bool changed = true;
    while (changed && out.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Point2 a = out[(i + out.size() - 1) % out.size()];
            const Point2 b = out[i];
            const Point2 c = out[(i + 1) % out.size()];
            if (std::abs(cross(b - a, c - a)) <= area_eps && dot(b - a, c - b) >= 0.0) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

// --- segment primitives ------------------------------------------------------

double segment_point_distance(Point2 a, Point2 b, Point2 p) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return dist(a, p);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(a + ab * t, p);
}

namespace {

int orientation_sign(Point2 a, Point2 b, Point2 c, double eps) {
    const double v = cross(b - a, c - a);
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool proper_or_touching_intersection(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
    const double scale = std::max({1.0, norm(a2 - a1), norm(b2 - b1)});
    const double eps = 1e-14 * scale * scale;
    const int o1 = orientation_sign(a1, a2, b1, eps);
    const int o2 = orientation_sign(a1, a2, b2, eps);
    const int o3 = orientation_sign(b1, b2, a1, eps);
    const int o4 = orientation_sign(b1, b2, a2, eps);
    if (o1 != o2 && o3 != o4 && o1 * o2 != 0 && o3 * o4 != 0) return true;
    // Collinear / endpoint-touching cases resolved by distance checks below.
    return false;
}

} // namespace

double segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
    if (proper_or_touching_intersection(a1, a2, b1, b2)) return 0.0;
    double best = segment_point_distance(a1, a2, b1);
    best = std::min(best, segment_point_distance(a1, a2, b2));
    best = std::min(best, segment_point_distance(b1, b2, a1));
    best = std::min(best, segment_point_distance(b1, b2, a2));
    return best;
}

bool segments_intersect(Point2 a1, Point2 a2, Point2 b1, Point2 b2, double tol) {
    return segment_distance(a1, a2, b1, b2) <= tol;
}

double collinear_overlap(Point2 a1, Point2 a2, Point2 b1, Point2 b2,
                         Point2* w0, Point2* w1, double angle_tol, double dist_tol) {
    const Point2 da = a2 - a1;
    const Point2 db = b2 - b1;
    const double la = norm(da);
    const double lb = norm(db);
    if (la <= 0.0 || lb <= 0.0) return 0.0;
    if (std::abs(cross(da, db)) > angle_tol * la * lb) return 0.0;
    if (segment_point_distance(a1, a2, b1) > dist_tol &&
        segment_point_distance(a1, a2, b2) > dist_tol &&
        segment_point_distance(b1, b2, a1) > dist_tol)
        return 0.0;
    // Line-offset check: b1 must sit on the supporting line of a.
    if (std::abs(cross(da, b1 - a1)) > dist_tol * la) return 0.0;
    const Point2 u = da * (1.0 / la);
    const double t0 = 0.0;
    const double t1 = la;
    double s0 = dot(b1 - a1, u);
    double s1 = dot(b2 - a1, u);
    if (s0 > s1) std::swap(s0, s1);
    const double lo = std::max(t0, s0);
    const double hi = std::min(t1, s1);
    if (hi <= lo) return 0.0;
    if (w0) *w0 = a1 + u * lo;
    if (w1) *w1 = a1 + u * hi;
    return hi - lo;
}

bool clip_segment_to_box(Point2& a, Point2& b, const Box& box) {
    // Liang-Barsky.
    double t0 = 0.0, t1 = 1.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - box.lo.x, box.hi.x - a.x, a.y - box.lo.y, box.hi.y - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
        } else {
            const double t = q[i] / p[i];
            if (p[i] < 0.0) t0 = std::max(t0, t);
            else t1 = std::min(t1, t);
        }
    }
    if (t0 > t1) return false;
    const Point2 na = {a.x + t0 * dx, a.y + t0 * dy};
    const Point2 nb = {a.x + t1 * dx, a.y + t1 * dy};
    a = na;
    b = nb;
    return true;
}

// --- hull / triangulation / clipping ------------------------------------------

Ring convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
                  return a.x == b.x && a.y == b.y;
              }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {
std::vector<Triangle> triangulate_impl(const Ring& input, bool retried);
} // namespace

std::vector<Triangle> triangulate(const Ring& input) { return triangulate_impl(input, false); }

namespace {

std::vector<Triangle> triangulate_impl(const Ring& input, bool retried) {
    Ring ring = simplify_ring(input);
    std::vector<Triangle> out;
    if (ring.size() < 3) return out;
    if (!ring_is_ccw(ring)) ring = reversed_ring(ring);
    const double scale = std::max(1.0, ring_bbox(ring).diagonal());
    const double area_eps = 1e-13 * scale * scale;

    std::vector<std::size_t> idx(ring.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    auto point_in_triangle = [&](Point2 p, Point2 a, Point2 b, Point2 c) {
        const double eps = -1e-12 * scale * scale;
        return cross(b - a, p - a) >= eps && cross(c - b, p - b) >= eps &&
               cross(a - c, p - c) >= eps;
    };

    while (idx.size() > 3) {
        bool clipped = false;
        for (std::size_t ii = 0; ii < idx.size(); ++ii) {
            const std::size_t ip = idx[(ii + idx.size() - 1) % idx.size()];
            const std::size_t ic = idx[ii];
            const std::size_t in = idx[(ii + 1) % idx.size()];
            const Point2 a = ring[ip];
            const Point2 b = ring[ic];
            const Point2 c = ring[in];
            const double cr = cross(b - a, c - a);
            if (cr < -area_eps) continue;  // reflex corner
            if (cr <= area_eps) {
                // Degenerate (collinear) corner carries no area; drop it.
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(ii));
                clipped = true;
                break;
            }
            bool blocked = false;
            for (std::size_t q : idx) {
                if (q == ip || q == ic || q == in) continue;
                if (point_in_triangle(ring[q], a, b, c)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            out.push_back({a, b, c});
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(ii));
            clipped = true;
            break;
        }
        if (!clipped) {
            if (retried) raise(ErrorKind::internal, "triangulation stalled on a non-simple ring");
            // One retry with the ring re-simplified more aggressively.
            Ring again = simplify_ring(ring, 1e-9);
            if (again.size() < 3) return out;
            return triangulate_impl(again, true);
        }
    }
    if (idx.size() == 3) {
        const Point2 a = ring[idx[0]], b = ring[idx[1]], c = ring[idx[2]];
        if (cross(b - a, c - a) > area_eps) out.push_back({a, b, c});
    }
    return out;
}

} // namespace

Ring clip_ring_convex(const Ring& subject, const Ring& convex_window) {
    Ring out = subject;
    const std::size_t m = convex_window.size();
    for (std::size_t i = 0; i < m && !out.empty(); ++i) {
        const Point2 a = convex_window[i];
        const Point2 b = convex_window[(i + 1) % m];
        const Point2 edge = b - a;
        Ring in;
        in.swap(out);
        const std::size_t n = in.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Point2 p = in[j];
            const Point2 q = in[(j + 1) % n];
            const double sp = cross(edge, p - a);
            const double sq = cross(edge, q - a);
            const bool pin = sp >= 0.0;
            const bool qin = sq >= 0.0;
            if (pin) out.push_back(p);
            if (pin != qin) {
                const double t = sp / (sp - sq);
                out.push_back(p + (q - p) * t);
            }
        }
    }
    return out;
}

Ring clip_ring_to_box(const Ring& subject, const Box& box) {
    const auto c = box.corners();
    return clip_ring_convex(subject, Ring(c.begin(), c.end()));
}

double convex_intersection_area(const Ring& a_convex, const Ring& b_convex) {
    if (a_convex.size() < 3 || b_convex.size() < 3) return 0.0;
    Ring clipped = clip_ring_convex(a_convex, b_convex);
    if (clipped.size() < 3) return 0.0;
    return std::abs(ring_signed_area(clipped));
}

double simple_rings_intersection_area(const std::vector<Triangle>& tri_a,
                                      const std::vector<Triangle>& tri_b) {
    double acc = 0.0;
    for (const Triangle& t : tri_a) {
        const Ring rt{t[0], t[1], t[2]};
        const Box bt = ring_bbox(rt);
        for (const Triangle& u : tri_b) {
            const Ring ru{u[0], u[1], u[2]};
            const Box bu = ring_bbox(ru);
            if (bt.hi.x < bu.lo.x || bu.hi.x < bt.lo.x || bt.hi.y < bu.lo.y || bu.hi.y < bt.lo.y)
                continue;
            acc += convex_intersection_area(rt, ru);
        }
    }
    return acc;
}

// --- arcs, offsets, shapes -----------------------------------------------------

namespace {

// Appends arc points strictly between the angles (exclusive start, inclusive
// end) so joints shared with neighbouring edges are not duplicated.
void append_arc(Ring& out, Point2 center, double radius, double a0, double a1,
                int segments_per_quarter) {
    double sweep = a1 - a0;
    while (sweep < 0.0) sweep += 2.0 * M_PI;
    const int steps = std::max(1, static_cast<int>(std::ceil(sweep / (M_PI / 2.0) *
                                                             segments_per_quarter)));
    for (int s = 1; s <= steps; ++s) {
        const double a = a0 + sweep * (static_cast<double>(s) / steps);
        out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
}

std::optional<Point2> line_intersection(Point2 p0, Point2 d0, Point2 p1, Point2 d1) {
    const double den = cross(d0, d1);
    const double scale = std::max(norm(d0), norm(d1));
    if (std::abs(den) <= 1e-12 * scale * scale) return std::nullopt;
    const double t = cross(p1 - p0, d1) / den;
    return p0 + d0 * t;
}

} // namespace

Ring disk_ring(Point2 center, double radius, int segments_per_quarter) {
    const int n = 4 * segments_per_quarter;
    Ring out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / n;
        out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return out;
}

Ring capsule_ring(Point2 a, Point2 b, double radius, int segments_per_quarter) {
    const Point2 d = b - a;
    const double len = norm(d);
    if (len <= 0.0) return disk_ring(a, radius, segments_per_quarter);
    const Point2 u = d * (1.0 / len);
    const Point2 n = {-u.y, u.x};  // left normal
    const double base = std::atan2(n.y, n.x);
    Ring out;
    out.push_back(a - n * radius);
    out.push_back(b - n * radius);
    append_arc(out, b, radius, base - M_PI, base, segments_per_quarter);
    // append_arc lands exactly on b + n*radius; continue along the left side.
    out.push_back(a + n * radius);
    append_arc(out, a, radius, base, base + M_PI, segments_per_quarter);
    out.pop_back();  // the final arc point coincides with out.front()
    return simplify_ring(out, 1e-12);
}

Ring regular_polygon(Point2 center, double radius, int sides) {
    Ring out;
    out.reserve(static_cast<std::size_t>(sides));
    for (int i = 0; i < sides; ++i) {
        const double a = 2.0 * M_PI * i / sides;
        out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return out;
}

Ring offset_ring_outward(const Ring& ccw, double r, int segments_per_quarter) {
    const std::size_t n = ccw.size();
    Ring out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = ccw[(i + n - 1) % n];
        const Point2 cur = ccw[i];
        const Point2 next = ccw[(i + 1) % n];
        const Point2 din = cur - prev;
        const Point2 dout = next - cur;
        const double lin = norm(din), lout = norm(dout);
        if (lin <= 0.0 || lout <= 0.0) continue;
        // Outward normal of a CCW ring is the right-hand normal.
        const Point2 nin = Point2{din.y, -din.x} * (1.0 / lin);
        const Point2 nout = Point2{dout.y, -dout.x} * (1.0 / lout);
        const double turn = cross(din, dout);
        if (turn > 1e-12 * lin * lout) {
            // Convex corner: round join from the incoming to the outgoing normal.
            out.push_back(cur + nin * r);
            append_arc(out, cur, r, std::atan2(nin.y, nin.x), std::atan2(nout.y, nout.x),
                       segments_per_quarter);
        } else if (turn < -1e-12 * lin * lout) {
            // Reflex corner: intersect the two offset edges (mitre).
            const auto hit = line_intersection(cur + nin * r, din, cur + nout * r, dout);
            out.push_back(hit ? *hit : cur + (nin + nout) * (0.5 * r));
        } else {
            out.push_back(cur + nin * r);
        }
    }
    return simplify_ring(out, 1e-12);
}

std::optional<Ring> offset_ring_inward(const Ring& ccw, double r, int segments_per_quarter) {
    const std::size_t n = ccw.size();
    Ring out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = ccw[(i + n - 1) % n];
        const Point2 cur = ccw[i];
        const Point2 next = ccw[(i + 1) % n];
        const Point2 din = cur - prev;
        const Point2 dout = next - cur;
        const double lin = norm(din), lout = norm(dout);
        if (lin <= 0.0 || lout <= 0.0) continue;
        const Point2 nin = Point2{-din.y, din.x} * (1.0 / lin);  // inward normal
        const Point2 nout = Point2{-dout.y, dout.x} * (1.0 / lout);
        const double turn = cross(din, dout);
        if (turn < -1e-12 * lin * lout) {
            // Reflex corner of the ring is convex from the inside: round join.
            out.push_back(cur + nin * r);
            append_arc(out, cur, r, std::atan2(nin.y, nin.x), std::atan2(nout.y, nout.x),
                       segments_per_quarter);
        } else if (turn > 1e-12 * lin * lout) {
            const auto hit = line_intersection(cur + nin * r, din, cur + nout * r, dout);
            out.push_back(hit ? *hit : cur + (nin + nout) * (0.5 * r));
        } else {
            out.push_back(cur + nin * r);
        }
    }
    out = simplify_ring(out, 1e-12);
    if (out.size() < 3) return std::nullopt;
    if (!ring_is_ccw(out)) return std::nullopt;              // collapsed through itself
    if (!ring_is_simple(out, 1e-12)) return std::nullopt;
    if (std::abs(ring_signed_area(out)) <= 1e-12) return std::nullopt;
    // An offset deeper than the inradius can re-invert into a ring that still
    // looks simple and CCW; genuine offsets keep clearance r to the boundary.
    const double clearance = r * (1.0 - 1e-9) - 1e-12;
    for (const Point2& v : out) {
        if (!ring_contains(ccw, v)) return std::nullopt;
        if (ring_boundary_distance(ccw, v) < clearance) return std::nullopt;
    }
    return out;
}

Ring buffer_open_polyline(const std::vector<Point2>& spine, double radius,
                          int segments_per_quarter) {
    if (spine.size() < 2) raise(ErrorKind::invalid_spine, "spine needs at least two points");

    // Walk down the right side, around the far cap, back up the left side and
    // around the start cap.  Convex turns (relative to the side being walked)
    // get round joins; concave turns get mitred joins.
    auto side_pass = [&](const std::vector<Point2>& pts, Ring& out) {
        const std::size_t m = pts.size();
        std::vector<Point2> dirs(m - 1), norms(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const Point2 d = pts[i + 1] - pts[i];
            const double l = norm(d);
            if (l <= 0.0) raise(ErrorKind::invalid_spine, "duplicate consecutive spine points");
            dirs[i] = d * (1.0 / l);
            norms[i] = {dirs[i].y, -dirs[i].x};  // right-hand normal
        }
        out.push_back(pts[0] + norms[0] * radius);
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const Point2 nin = norms[i - 1];
            const Point2 nout = norms[i];
            const double turn = cross(dirs[i - 1], dirs[i]);
            out.push_back(pts[i] + nin * radius);
            if (turn > 1e-12) {
                // Turning left: the right side is outside, use an arc.
                append_arc(out, pts[i], radius, std::atan2(nin.y, nin.x),
                           std::atan2(nout.y, nout.x), segments_per_quarter);
            } else if (turn < -1e-12) {
                const auto hit = line_intersection(pts[i] + nin * radius, dirs[i - 1],
                                                   pts[i] + nout * radius, dirs[i]);
                out.pop_back();
                out.push_back(hit ? *hit : pts[i] + (nin + nout) * (0.5 * radius));
            }
        }
        out.push_back(pts[m - 1] + norms[m - 2] * radius);
    };

    // Angle of the right-hand normal of a unit direction u.
    auto right_normal_angle = [](Point2 u) { return std::atan2(-u.x, u.y); };

    Ring out;
    side_pass(spine, out);
    {   // far end cap: half circle from the right normal to the left normal
        const Point2 d = spine[spine.size() - 1] - spine[spine.size() - 2];
        const double a0 = right_normal_angle(d * (1.0 / norm(d)));
        append_arc(out, spine.back(), radius, a0, a0 + M_PI, segments_per_quarter);
    }
    std::vector<Point2> back(spine.rbegin(), spine.rend());
    Ring left;
    side_pass(back, left);
    // side_pass(back) starts exactly where the far cap ended; skip that point.
    out.insert(out.end(), left.begin() + 1, left.end());
    {   // start cap
        const Point2 d = spine[0] - spine[1];
        const double a0 = right_normal_angle(d * (1.0 / norm(d)));
        append_arc(out, spine.front(), radius, a0, a0 + M_PI, segments_per_quarter);
    }
    if (!out.empty()) out.pop_back();  // final arc point closes onto out.front()
    return simplify_ring(out, 1e-12);
}

} // namespace proxregio
