#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proxregio/geometry.hpp"

namespace proxregio {

using FeatureMap = std::map<std::string, double>;

enum class PartMembership { interior, boundary, exterior };

struct Measures {
    double area = 0.0;       // interior area; boundary length for wireframe regions
    double perimeter = 0.0;  // total boundary length (outer ring plus holes)
    double diameter = 0.0;   // max pairwise distance between outer-ring vertices
    Point2 centroid;
};

// A closed polygonal region: one counterclockwise outer ring plus zero or more
// clockwise holes.  A region flagged as a hole region is a closed wireframe
// with empty interior; it keeps its rings as pure boundary and reports the
// boundary length as its area.
class Region {
public:
    Region(std::string id, Ring outer, std::vector<Ring> holes = {},
           bool is_hole_region = false, FeatureMap features = {});

    const std::string& id() const { return id_; }
    const Ring& outer() const { return outer_; }
    const std::vector<Ring>& holes() const { return holes_; }
    bool is_hole_region() const { return is_hole_region_; }
    const FeatureMap& features() const { return features_; }
    const Box& bbox() const { return bbox_; }
    const Measures& measures() const { return measures_; }

    // All rings (outer first, then holes); every ring is part of the boundary.
    std::vector<const Ring*> rings() const;

    // Cached triangulations of the outer ring and each hole (empty for
    // wireframe regions, whose interior carries no area).
    const std::vector<Triangle>& outer_triangles() const { return tri_outer_; }
    const std::vector<std::vector<Triangle>>& hole_triangles() const { return tri_holes_; }

    double boundary_distance(Point2 p) const;
    // Closure membership: interior or boundary.
    bool contains(Point2 p, double boundary_eps = 1e-12) const;
    bool strictly_inside(Point2 p, double boundary_eps = 1e-12) const;

    Region with_id(std::string new_id) const;
    Region translated(Point2 delta, std::string new_id) const;

private:
    std::string id_;
    Ring outer_;
    std::vector<Ring> holes_;
    bool is_hole_region_ = false;
    FeatureMap features_;
    Box bbox_{};
    Measures measures_{};
    std::vector<Triangle> tri_outer_;
    std::vector<std::vector<Triangle>> tri_holes_;
};

Measures measure(const Region& r);

PartMembership part_membership(const Region& r, Point2 p, double eps = 1e-9);

// True for regions with nonempty interior, no holes, and a convex outer ring.
bool is_convex(const Region& r);

// Max pairwise distance between the vertex sets of two regions (used by
// sweeps and witnesses); exact for polygons.
double hausdorff_upper_bound(const Region& a, const Region& b);

// Cech distance inf{d(p,q)}: zero when the closures intersect, otherwise the
// minimum distance between boundary edges.  Exact for polygonal regions.
double cech_distance(const Region& a, const Region& b);

// Area of the intersection of two regions (hole-aware, via cached
// triangulations).  Wireframe regions contribute zero area.
double intersection_area(const Region& a, const Region& b);

// Total length of boundary segments the two regions share (collinear overlap
// of boundary edges).  Fills the endpoints of the longest shared piece.
double shared_boundary_length(const Region& a, const Region& b,
                              Point2* w0 = nullptr, Point2* w1 = nullptr);

// A point interior to both regions, when the intersection has positive area.
std::optional<Point2> interior_overlap_point(const Region& a, const Region& b);

struct DilationResult {
    Region region;
    bool clipped = false;       // dilation exceeded the box and was clipped
    bool conservative = false;  // fell back to the convex hull of the input
};

// Minkowski dilation by a closed disk of radius r (round joins, arcs with
// the given number of segments per quarter turn), clipped to the box.
// r == 0 returns the region unchanged.  Holes shrink and may vanish.
DilationResult dilate(const Region& r, double radius, const Box& box,
                      int segments_per_quarter = kArcSegmentsPerQuarter);

// Convex hull of a region's outer vertices as a new region.
Region convex_hull_region(const Region& r, const std::string& id);

} // namespace proxregio
