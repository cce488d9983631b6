#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace proxregio {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
inline Point2 operator*(double s, Point2 a) { return a * s; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

// Axis-aligned box.
struct Box {
    Point2 lo;
    Point2 hi;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double diagonal() const { return dist(lo, hi); }
    bool contains(Point2 p, double slack = 0.0) const {
        return p.x >= lo.x - slack && p.x <= hi.x + slack &&
               p.y >= lo.y - slack && p.y <= hi.y + slack;
    }
    std::array<Point2, 4> corners() const {
        return {Point2{lo.x, lo.y}, Point2{hi.x, lo.y}, Point2{hi.x, hi.y}, Point2{lo.x, hi.y}};
    }
};

// Closed polygonal ring; the edge from back() to front() is implicit.
using Ring = std::vector<Point2>;

using Triangle = std::array<Point2, 3>;

double ring_signed_area(const Ring& r);
double ring_perimeter(const Ring& r);
Point2 ring_area_centroid(const Ring& r);    // area-weighted centroid
Point2 ring_length_centroid(const Ring& r);  // boundary mass centroid (for wireframes)
Box ring_bbox(const Ring& r);
Ring reversed_ring(Ring r);
bool ring_is_ccw(const Ring& r);
bool ring_is_convex(const Ring& r, double tol = 1e-12);
bool ring_is_simple(const Ring& r, double tol = 1e-12);
// Strict point-in-polygon by crossing number; points on the boundary give an
// arbitrary answer, so callers must test boundary distance separately.
bool ring_contains(const Ring& r, Point2 p);
double ring_boundary_distance(const Ring& r, Point2 p);
// Drops consecutive duplicates and collinear middle vertices (used to clean
// rings produced by clipping/offsetting, never applied to caller input).
Ring simplify_ring(const Ring& r, double tol = 1e-12);

// --- segment primitives -----------------------------------------------------

double segment_point_distance(Point2 a, Point2 b, Point2 p);
double segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2);
bool segments_intersect(Point2 a1, Point2 a2, Point2 b1, Point2 b2, double tol = 0.0);
// Length of the collinear overlap of two segments; fills the overlap endpoints
// when the result is positive.
double collinear_overlap(Point2 a1, Point2 a2, Point2 b1, Point2 b2,
                         Point2* w0 = nullptr, Point2* w1 = nullptr,
                         double angle_tol = 1e-9, double dist_tol = 1e-9);
// Clips segment [a,b] to a box; returns false when nothing remains.
bool clip_segment_to_box(Point2& a, Point2& b, const Box& box);

// --- hull / triangulation / clipping ----------------------------------------

// Andrew monotone chain; returns CCW hull without collinear interior points.
// Inputs with fewer than 3 distinct non-collinear points yield a ring with
// fewer than 3 vertices (callers decide whether that is an error).
Ring convex_hull(std::vector<Point2> pts);

// Ear-clipping triangulation of a simple CCW ring.
std::vector<Triangle> triangulate(const Ring& ring);

// Sutherland-Hodgman clip of an arbitrary simple ring against a convex CCW
// window.  The output may contain degenerate edges along the window boundary;
// its signed area is exact for area bookkeeping.
Ring clip_ring_convex(const Ring& subject, const Ring& convex_window);
Ring clip_ring_to_box(const Ring& subject, const Box& box);

double convex_intersection_area(const Ring& a_convex, const Ring& b_convex);

// Intersection area of two simple rings via triangulation (no holes here;
// region-level hole bookkeeping lives in region.cpp).
double simple_rings_intersection_area(const std::vector<Triangle>& tri_a,
                                      const std::vector<Triangle>& tri_b);

// --- arcs, offsets, shapes ---------------------------------------------------

// Number of segments used to approximate a quarter circle in all constructed
// arcs (dilations, capsule caps, vertex disks).
inline constexpr int kArcSegmentsPerQuarter = 16;

Ring disk_ring(Point2 center, double radius, int segments_per_quarter = kArcSegmentsPerQuarter);
Ring capsule_ring(Point2 a, Point2 b, double radius, int segments_per_quarter = kArcSegmentsPerQuarter);
Ring regular_polygon(Point2 center, double radius, int sides);

// Outward offset of a simple CCW ring by r > 0 with round joins at convex
// vertices and mitred joins at reflex ones.  Result may self-intersect for
// deep concavities; callers validate with ring_is_simple.
Ring offset_ring_outward(const Ring& ccw, double r,
                         int segments_per_quarter = kArcSegmentsPerQuarter);
// Inward offset (erosion) of a simple CCW ring by r > 0.  Returns nullopt when
// the ring collapses (offset exceeds the inradius) or the result degenerates.
std::optional<Ring> offset_ring_inward(const Ring& ccw, double r,
                                       int segments_per_quarter = kArcSegmentsPerQuarter);

// Round-capped buffer of an open polyline (width/2 on each side).
Ring buffer_open_polyline(const std::vector<Point2>& spine, double radius,
                          int segments_per_quarter = kArcSegmentsPerQuarter);

} // namespace proxregio
