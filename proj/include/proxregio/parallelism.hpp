#pragma once

#include <optional>
#include <string>
#include <utility>

#include "proxregio/description.hpp"
#include "proxregio/region.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

// A straight physical line: a two-point spine of constant slope swept to a
// capsule of positive width.
struct PhysicalLine {
    std::string id;
    Point2 p0;
    Point2 p1;
    double width = 0.0;
    Region region;
};

PhysicalLine make_line(const std::string& id, Point2 p0, Point2 p1, double width,
                       const Scene& scene);

enum class ParallelKind { local, proximal, descriptive, class_level };

const char* parallel_kind_name(ParallelKind k);

struct ParallelVerdict {
    ParallelKind kind = ParallelKind::local;
    bool holds = false;
    // Evidence (populated according to kind and outcome):
    std::optional<std::pair<Point2, Point2>> transversal;  // right-angle crossing segment
    std::optional<double> gap;                             // minimal gap between extensions
    std::optional<std::pair<std::string, std::string>> failing_pair;
    bool conservative = false;  // a non-convex region was swept by its hull
    std::string note;
};

// Spine directions equal within tol_angle (mod pi) and a transversal segment
// meets both spines at right angles within tol_angle.
ParallelVerdict locally_parallel(const PhysicalLine& a, const PhysicalLine& b,
                                 double tol_angle = 1e-6);

// The supporting lines of both spines, extended across the scene box and
// swept to bands of the lines' widths, remain strongly far.
ParallelVerdict proximal_parallel(const PhysicalLine& a, const PhysicalLine& b,
                                  const Scene& scene);

// Minkowski sweep of a region along +/- direction out to the scene box; the
// sweep of a non-convex or wireframe region uses its convex hull and flags
// the result as conservative.
Region sweep_region(const Region& r, Point2 direction, const Box& box, const std::string& id,
                    bool* conservative = nullptr);

// The direction-swept extensions of the two regions remain strongly far.
ParallelVerdict parallel_regions(const Region& a, const Region& b, const Scene& scene,
                                 Point2 direction);

// parallel_regions AND descriptive nearness (matching descriptions).
ParallelVerdict descriptively_parallel(const Region& a, const Region& b, const Scene& scene,
                                       const ProbeRegistry& reg, Point2 direction);

// Every cross pair of members satisfies the chosen pairwise predicate; the
// first failing pair is reported otherwise.  Classes must not share members.
ParallelVerdict classes_parallel(const RegionClass& ca, const RegionClass& cb, const Scene& scene,
                                 const ProbeRegistry& reg, Point2 direction, bool descriptive);

} // namespace proxregio
