#pragma once

#include <string>
#include <vector>

#include "proxregio/region.hpp"

namespace proxregio {

class Scene;

// A physical string: a spine swept to a band of constant width.  Straight or
// curved, open or closed; a closed spine yields an annular region.
struct PhysicalString {
    std::string id;
    std::vector<Point2> spine;
    double width = 0.0;
    Region region;  // buffered band, width/2 on each side of the spine

    bool closed() const;
    bool straight(double angle_tol = 1e-9) const;  // all spine segments parallel
    double length() const;                         // spine arc length
};

// Builds the band region from the spine; validates the spine (simple, inside
// the scene box after buffering) and the width.
PhysicalString make_string(const std::string& id, std::vector<Point2> spine, double width,
                           const Scene& scene);

// A worldsheet is a region claimed to be covered by a set of strings.
struct Worldsheet {
    Region region;
    std::vector<std::string> string_ids;
};

struct WorldsheetVerdict {
    bool covered = false;
    std::vector<std::pair<int, int>> uncovered_cells;  // grid keys (i, j)
};

// Every grid cell of the region must meet at least one of the strings.
WorldsheetVerdict is_worldsheet(const Region& region, const std::vector<PhysicalString>& strings,
                                const Scene& scene);

struct Cylinder {
    double radius = 0.0;
    double lateral_area = 0.0;
};

// Rolling a rectangular sheet into a cylinder: circumference = sheet width,
// lateral area = width * length (exact by construction).
Cylinder roll_cylinder(double sheet_width, double sheet_length);

} // namespace proxregio
