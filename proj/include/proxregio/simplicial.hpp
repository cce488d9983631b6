#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "proxregio/region.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

// True when the points are affinely independent (within a determinant
// tolerance): 1 point always, 2 distinct points, 3 non-collinear points.
// More than 3 points cannot be independent in the plane (dimension error).
bool is_simplex(const std::vector<Point2>& points, double tol = 1e-12);

// A geometric vertex: a physical point realized as a small disk.
struct ComplexVertex {
    Point2 center;
    double radius = 0.0;
};

// A simplex as sorted indices into the complex vertex list (k = size - 1).
using SimplexIndices = std::vector<int>;

// A finite 2-D simplicial complex: vertices plus explicitly listed simplices
// (0-, 1- and 2-dimensional).  Faces must be listed for the complex to be
// valid (face closure), and distinct simplices may only meet in common faces.
// The validation rules extend to k = 3 combinatorially, but the geometric
// checks are implemented for the plane only.
struct SimplicialComplex {
    std::vector<ComplexVertex> vertices;
    std::vector<SimplexIndices> simplices;

    bool has_simplex(const SimplexIndices& s) const;
};

struct ComplexValidation {
    bool valid = false;
    std::vector<std::string> violations;
};

ComplexValidation validate_complex(const SimplicialComplex& c, double tol = 1e-9);

// Ordered descriptions of the complex: one feature vector per vertex disk,
// in vertex order.
std::vector<FeatureVector> complex_description(const SimplicialComplex& c, const Scene& scene,
                                               const ProbeRegistry& reg);

struct Bridge {
    Point2 a_anchor_point;  // vertex placed inside region a
    Point2 b_anchor_point;  // vertex placed inside region b
    CellKey a_cell;
    CellKey b_cell;
};

struct SewResult {
    std::string a_id;
    std::string b_id;
    std::vector<Bridge> bridges;
    SimplicialComplex complex;
    ComplexValidation validation;
    bool rectangular = false;  // k = 2 and the bridge cycle forms a rectangle
    double vertex_radius = 0.0;

    // The scene extended with the bridge vertices (disks) and bridge edges
    // (thin bands), so connectivity queries can run on the sewn result.
    Scene augmented_scene(const Scene& base) const;
};

// Sews two disjoint regions with k bridge edges anchored at the closest
// facing boundary cells (ties by lexicographic cell index).  Bridge vertices
// are disks of radius scene.epsilon * 1e3 placed strictly inside the anchor
// cells; consecutive anchors on each side are chained with intra-region
// edges so the complex is connected.
SewResult sew(const Region& a, const Region& b, int k, const Scene& scene);

// Shortest chain of pairwise strongly-near regions from a to b (ids,
// endpoints included); nullopt when no chain exists.
std::optional<std::vector<std::string>> path_connected(const Region& a, const Region& b,
                                                       const Scene& scene);

} // namespace proxregio
