#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxregio/description.hpp"
#include "proxregio/region.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

enum class Relation {
    near,                        // Cech distance <= epsilon
    strongly_near,               // interiors overlap or a boundary segment is shared
    far,                         // not near
    strongly_far,                // Cech distance > 2*epsilon, with a separator witness
    descriptively_near,          // descriptive intersection nonempty
    descriptively_strongly_near, // interior-cell descriptions intersect
};

const char* relation_name(Relation r);

struct RelationVerdict {
    Relation relation = Relation::near;
    bool holds = false;
    // Witness payloads (which ones are set depends on the relation):
    std::optional<double> gap;                               // Cech distance
    std::optional<Point2> shared_point;                      // point interior to both
    std::optional<std::pair<Point2, Point2>> shared_segment; // common boundary piece
    std::optional<CellKey> shared_cell;                      // a grid cell met by both
    // Strongly-far separator: one dilated piece per member of the first group;
    // their union C satisfies both separation checks of the EF definition.
    std::vector<Region> separator;
};

// Cech distance between groups: min over member pairs; infinity for an empty
// group (so nothing is near the empty set).
double cech_distance(const RegionGroup& a, const RegionGroup& b, const Scene& scene);

RelationVerdict near(const RegionGroup& a, const RegionGroup& b, const Scene& scene);
RelationVerdict far(const RegionGroup& a, const RegionGroup& b, const Scene& scene);
RelationVerdict strongly_near(const RegionGroup& a, const RegionGroup& b, const Scene& scene);
RelationVerdict strongly_far(const RegionGroup& a, const RegionGroup& b, const Scene& scene);
RelationVerdict descriptively_near(const RegionGroup& a, const RegionGroup& b, const Scene& scene,
                                   const ProbeRegistry& reg);
RelationVerdict descriptively_strongly_near(const RegionGroup& a, const RegionGroup& b,
                                            const Scene& scene, const ProbeRegistry& reg);

// Single-region conveniences.
RelationVerdict near(const Region& a, const Region& b, const Scene& scene);
RelationVerdict far(const Region& a, const Region& b, const Scene& scene);
RelationVerdict strongly_near(const Region& a, const Region& b, const Scene& scene);
RelationVerdict strongly_far(const Region& a, const Region& b, const Scene& scene);
RelationVerdict dnear(const Region& a, const Region& b, const Scene& scene,
                      const ProbeRegistry& reg);
RelationVerdict dsnear(const Region& a, const Region& b, const Scene& scene,
                       const ProbeRegistry& reg);

// An ordered set of relations evaluated together over one pair.
struct ProximalRelator {
    std::vector<Relation> relations;
};

ProximalRelator default_relator();  // near, strongly_near, far, strongly_far

struct RelatorReport {
    std::vector<RelationVerdict> verdicts;
    bool implication_violation = false;  // strongly_near held while near failed
    std::string note;
};

RelatorReport relator_eval(const ProximalRelator& relator, const RegionGroup& a,
                           const RegionGroup& b, const Scene& scene);

} // namespace proxregio
