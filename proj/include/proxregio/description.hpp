#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proxregio/region.hpp"

namespace proxregio {

class Scene;
struct SubregionCell;

enum class ProbeKind {
    area,
    perimeter,
    diameter,
    convexity,        // 1 when convex, else 0
    hole_count,
    color_r,
    color_g,
    color_b,
    curvature_proxy,  // isoperimetric quotient 4*pi*area / perimeter^2
    custom_constant,  // read from the feature store, default 0
};

const char* probe_kind_name(ProbeKind k);
std::optional<ProbeKind> probe_kind_from_name(const std::string& name);

// A probe maps a region to one real feature component.  Color and custom
// probes read the region's feature store under the probe's name; geometric
// probes compute from the region, unless the feature store overrides them
// (an entry under the probe's name always wins).
struct Probe {
    std::string name;
    ProbeKind kind = ProbeKind::custom_constant;
};

struct ProbeRegistry {
    std::vector<Probe> probes;
    double tolerance = 1e-6;  // per-component absolute match tolerance

    std::size_t size() const { return probes.size(); }
};

struct FeatureVector {
    std::vector<double> values;

    bool operator==(const FeatureVector&) const = default;
};

// Componentwise match under the registry tolerance.
bool features_match(const FeatureVector& a, const FeatureVector& b, double tolerance);
double feature_distance(const FeatureVector& a, const FeatureVector& b);  // Euclidean

double evaluate_probe(const Probe& p, const Region& r);
FeatureVector describe(const Region& r, const ProbeRegistry& reg);

// --- scene-level descriptive machinery ---------------------------------------
//
// Relations quantify over finite sets of regions (a single region is the
// singleton set).  Members are referenced by id.
using RegionGroup = std::vector<std::string>;

// Cells of the members of a and b whose descriptions occur, within the
// registry tolerance, among both sides' cell descriptions.  A cell covered by
// several scene regions carries each covering region's description.
std::vector<SubregionCell> descriptive_intersection(const RegionGroup& a, const RegionGroup& b,
                                                    const Scene& scene, const ProbeRegistry& reg);

// All descriptions carried by the group's cells (deduplicated exactly).
std::vector<FeatureVector> description_set(const RegionGroup& g, const Scene& scene,
                                           const ProbeRegistry& reg);
// Descriptions carried by interior cells only.  A region with positive
// interior but no interior cell at the scene pitch (point regions, thin
// slivers) falls back to its own description; wireframes contribute nothing.
std::vector<FeatureVector> interior_description_set(const RegionGroup& g, const Scene& scene,
                                                    const ProbeRegistry& reg);

// Descriptive congruence: matching feature vectors under the tolerance.
bool descriptively_congruent(const Region& a, const Region& b, const ProbeRegistry& reg);
// Spatial congruence: equal areas.
bool area_congruent(const Region& a, const Region& b, double tol = 1e-9);
// Shape nearness by one scalar trait.
bool equal_perimeters(const Region& a, const Region& b, double tol);
bool equal_interior_areas(const Region& a, const Region& b, double tol);

struct RegionClass {
    std::string representative;
    std::vector<std::string> members;  // sorted ids, includes the representative
    ProbeRegistry registry;
};

// All scene regions descriptively near the representative.
RegionClass class_of_regions(const Scene& scene, const std::string& representative_id,
                             const ProbeRegistry& reg);

// Every member's description lies strictly within eps (Euclidean) of the
// anchor's description.
bool phi_bounded(const std::vector<std::string>& member_ids, const std::string& anchor_id,
                 double eps, const Scene& scene, const ProbeRegistry& reg);

// Descriptive closure of a family: every scene region whose description
// matches some member's description within the registry tolerance.
std::vector<std::string> family_closure(const std::vector<std::string>& member_ids,
                                        const Scene& scene, const ProbeRegistry& reg);

} // namespace proxregio
