#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proxregio/description.hpp"
#include "proxregio/region.hpp"

namespace proxregio {

class Scene;
struct ParallelVerdict;

// --- descriptive fibre spaces -------------------------------------------------

// A fibre space over a region class: the projection sends each member to its
// description; the base is the set of distinct descriptions.
struct FibreSpace {
    RegionClass total;
    std::vector<FeatureVector> base;                 // distinct descriptions, first-seen order
    std::map<std::string, FeatureVector> projection; // member id -> description
    double tolerance = 1e-6;
};

FibreSpace build_fibre_space(const RegionClass& cls, const Scene& scene, const ProbeRegistry& reg);

struct FibreResult {
    bool found = false;
    std::vector<std::string> member_ids;  // sorted
};

// Preimage of a description under the projection; a vector outside the base
// reports found = false (not an error).
FibreResult fibre(const FibreSpace& fs, const FeatureVector& v);

// A fibre space is a sheaf when the projection is a bijection onto the base
// (every fibre is a singleton).
bool is_sheaf(const FibreSpace& fs);

// Bundle parallelism: both spaces must be sheaves; the verdict is the class
// parallelism of the totals, computed over the union of the fibres.
ParallelVerdict bundles_parallel(const FibreSpace& a, const FibreSpace& b, const Scene& scene,
                                 Point2 direction, bool descriptive);

// --- antipodal grids -----------------------------------------------------------

enum class GridTopology { circle, sphere_latlong, torus };

const char* grid_topology_name(GridTopology t);
std::optional<GridTopology> grid_topology_from_name(const std::string& name);

struct GridCell {
    int row = 0;
    int col = 0;
    Ring polygon;
    double area = 0.0;
};

// A finite cell decomposition of a closed surface with a fixed-point-free
// antipodal involution on the cells.  circle: one row of an even number of
// cells, antipode shifts by half the count.  sphere_latlong: latitude rows
// (polar caps excluded) by an even number of columns; the antipode mirrors
// the row and shifts the column by half.  torus: even rows x even cols, the
// antipode shifts both by half.
class AntipodalGrid {
public:
    AntipodalGrid(std::string id, GridTopology topology, int rows, int cols, const Box& box);

    const std::string& id() const { return id_; }
    GridTopology topology() const { return topology_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cell_count() const { return rows_ * cols_; }
    const std::vector<GridCell>& cells() const { return cells_; }
    double tolerance() const { return tolerance_; }
    void set_tolerance(double t) { tolerance_ = t; }

    int antipode(int flat_index) const;
    int flat_index(int row, int col) const { return row * cols_ + col; }

    const std::vector<FeatureVector>& field() const { return field_; }
    // Field vectors must be one per cell, all the same width.
    void set_field(std::vector<FeatureVector> field);
    // Convenience field (area, r, g, b) with one color per cell.
    void set_color_field(const std::vector<std::array<double, 3>>& colors);

private:
    std::string id_;
    GridTopology topology_;
    int rows_;
    int cols_;
    std::vector<GridCell> cells_;
    std::vector<FeatureVector> field_;
    double tolerance_ = 1e-6;
};

struct AntipodalMatch {
    int cell = 0;
    int antipode = 0;
    FeatureVector value;
};

// Exhaustive scan for a cell whose field value matches its antipode's within
// the grid tolerance; first match in flat-index order.
std::optional<AntipodalMatch> find_antipodal_match(const AntipodalGrid& grid);

// --- wired-friend shape descriptors --------------------------------------------

// A shape descriptor built from congruence-invariant probes only; a candidate
// region is "recognized" when its description lands in the closed ball of
// radius r around the reference description.
struct ShapeDescriptor {
    FeatureVector reference;
    double ball_radius = 1e-6;
    ProbeRegistry registry;
};

ShapeDescriptor make_shape_descriptor(const Region& reference, const ProbeRegistry& reg,
                                      double ball_radius = 1e-6);

struct WiredFriendResult {
    FeatureVector vector;
    bool in_ball = false;
    double distance = 0.0;
};

WiredFriendResult wired_friend_map(const ShapeDescriptor& descriptor, const Region& candidate);

} // namespace proxregio
