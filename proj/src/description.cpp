#include "proxregio/description.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "proxregio/errors.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

const char* probe_kind_name(ProbeKind k) {
    switch (k) {
        case ProbeKind::area: return "area";
        case ProbeKind::perimeter: return "perimeter";
        case ProbeKind::diameter: return "diameter";
        case ProbeKind::convexity: return "convexity";
        case ProbeKind::hole_count: return "hole_count";
        case ProbeKind::color_r: return "color_r";
        case ProbeKind::color_g: return "color_g";
        case ProbeKind::color_b: return "color_b";
        case ProbeKind::curvature_proxy: return "curvature_proxy";
        case ProbeKind::custom_constant: return "custom_constant";
    }
    return "?";
}

std::optional<ProbeKind> probe_kind_from_name(const std::string& name) {
    for (ProbeKind k : {ProbeKind::area, ProbeKind::perimeter, ProbeKind::diameter,
                        ProbeKind::convexity, ProbeKind::hole_count, ProbeKind::color_r,
                        ProbeKind::color_g, ProbeKind::color_b, ProbeKind::curvature_proxy,
                        ProbeKind::custom_constant})
        if (name == probe_kind_name(k)) return k;
    return std::nullopt;
}

bool features_match(const FeatureVector& a, const FeatureVector& b, double tolerance) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tolerance) return false;
    return true;
}

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.values.size() != b.values.size())
        raise(ErrorKind::configuration, "feature vectors of different widths");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double evaluate_probe(const Probe& p, const Region& r) {
    // The feature store always wins, regardless of the probe kind.
    auto it = r.features().find(p.name);
    if (it != r.features().end()) return it->second;
    const Measures& m = r.measures();
    switch (p.kind) {
        case ProbeKind::area: return m.area;
        case ProbeKind::perimeter: return m.perimeter;
        case ProbeKind::diameter: return m.diameter;
        case ProbeKind::convexity: return is_convex(r) ? 1.0 : 0.0;
        case ProbeKind::hole_count: return static_cast<double>(r.holes().size());
        case ProbeKind::curvature_proxy:
            return m.perimeter > 0.0 ? 4.0 * M_PI * m.area / (m.perimeter * m.perimeter) : 0.0;
        case ProbeKind::color_r:
        case ProbeKind::color_g:
        case ProbeKind::color_b:
        case ProbeKind::custom_constant:
            return 0.0;  // store-backed probes default to 0 when unset
    }
    return 0.0;
}

FeatureVector describe(const Region& r, const ProbeRegistry& reg) {
    FeatureVector v;
    v.values.reserve(reg.probes.size());
    for (const Probe& p : reg.probes) v.values.push_back(evaluate_probe(p, r));
    return v;
}

namespace {

// A cell key carries the description of every scene region covering it; a
// cell shared by two regions therefore shares a description with both, which
// is what makes overlap imply descriptive nearness.
std::vector<FeatureVector> cell_descriptions(const Scene& scene, const ProbeRegistry& reg,
                                             CellKey key) {
    std::vector<FeatureVector> out;
    for (std::size_t idx : scene.covering(key))
        out.push_back(describe(scene.region_at(idx), reg));
    return out;
}

void dedup(std::vector<FeatureVector>& v) {
    std::sort(v.begin(), v.end(),
              [](const FeatureVector& a, const FeatureVector& b) { return a.values < b.values; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool any_match(const FeatureVector& d, const std::vector<FeatureVector>& set, double tol) {
    for (const FeatureVector& u : set)
        if (features_match(d, u, tol)) return true;
    return false;
}

} // namespace

std::vector<FeatureVector> description_set(const RegionGroup& g, const Scene& scene,
                                           const ProbeRegistry& reg) {
    std::vector<FeatureVector> out;
    for (const std::string& id : g) {
        const RegionGrid& grid = scene.grid_of(id);
        for (const SubregionCell& cell : grid.cells) {
            auto ds = cell_descriptions(scene, reg, cell.index);
            out.insert(out.end(), ds.begin(), ds.end());
        }
    }
    dedup(out);
    return out;
}

std::vector<FeatureVector> interior_description_set(const RegionGroup& g, const Scene& scene,
                                                    const ProbeRegistry& reg) {
    std::vector<FeatureVector> out;
    for (const std::string& id : g) {
        const Region& r = scene.find_region(id);
        if (r.is_hole_region()) continue;  // empty interior contributes nothing
        const RegionGrid& grid = scene.grid_of(id);
        if (grid.interior_count == 0) {
            // Positive interior unresolved at this pitch (point regions and
            // thin bands): the region stands in for its interior.
            out.push_back(describe(r, reg));
            continue;
        }
        for (const SubregionCell& cell : grid.cells) {
            if (!cell.interior_cell) continue;
            auto ds = cell_descriptions(scene, reg, cell.index);
            out.insert(out.end(), ds.begin(), ds.end());
        }
    }
    dedup(out);
    return out;
}

std::vector<SubregionCell> descriptive_intersection(const RegionGroup& a, const RegionGroup& b,
                                                    const Scene& scene, const ProbeRegistry& reg) {
    std::vector<SubregionCell> out;
    if (a.empty() || b.empty()) return out;
    const auto da = description_set(a, scene, reg);
    const auto db = description_set(b, scene, reg);
    std::set<std::pair<std::string, std::pair<int, int>>> seen;
    auto scan = [&](const RegionGroup& side) {
        for (const std::string& id : side) {
            const RegionGrid& grid = scene.grid_of(id);
            for (const SubregionCell& cell : grid.cells) {
                if (!seen.insert({cell.owner, {cell.index.i, cell.index.j}}).second) continue;
                for (const FeatureVector& d : cell_descriptions(scene, reg, cell.index)) {
                    if (any_match(d, da, reg.tolerance) && any_match(d, db, reg.tolerance)) {
                        out.push_back(cell);
                        break;
                    }
                }
            }
        }
    };
    scan(a);
    scan(b);
    std::sort(out.begin(), out.end(), [](const SubregionCell& x, const SubregionCell& y) {
        return x.owner < y.owner || (x.owner == y.owner && x.index < y.index);
    });
    return out;
}

bool descriptively_congruent(const Region& a, const Region& b, const ProbeRegistry& reg) {
    return features_match(describe(a, reg), describe(b, reg), reg.tolerance);
}

bool area_congruent(const Region& a, const Region& b, double tol) {
    return std::abs(a.measures().area - b.measures().area) <= tol;
}

bool equal_perimeters(const Region& a, const Region& b, double tol) {
    return std::abs(a.measures().perimeter - b.measures().perimeter) <= tol;
}

bool equal_interior_areas(const Region& a, const Region& b, double tol) {
    const double ia = a.is_hole_region() ? 0.0 : a.measures().area;
    const double ib = b.is_hole_region() ? 0.0 : b.measures().area;
    return std::abs(ia - ib) <= tol;
}

RegionClass class_of_regions(const Scene& scene, const std::string& representative_id,
                             const ProbeRegistry& reg) {
    const Region& rep = scene.find_region(representative_id);
    const FeatureVector ref = describe(rep, reg);
    RegionClass cls;
    cls.representative = representative_id;
    cls.registry = reg;
    for (std::size_t i = 0; i < scene.region_count(); ++i) {
        const Region& r = scene.region_at(i);
        if (features_match(ref, describe(r, reg), reg.tolerance)) cls.members.push_back(r.id());
    }
    std::sort(cls.members.begin(), cls.members.end());
    return cls;
}

bool phi_bounded(const std::vector<std::string>& member_ids, const std::string& anchor_id,
                 double eps, const Scene& scene, const ProbeRegistry& reg) {
    const FeatureVector anchor = describe(scene.find_region(anchor_id), reg);
    for (const std::string& id : member_ids)
        if (!(feature_distance(describe(scene.find_region(id), reg), anchor) < eps)) return false;
    return true;
}

std::vector<std::string> family_closure(const std::vector<std::string>& member_ids,
                                        const Scene& scene, const ProbeRegistry& reg) {
    std::vector<FeatureVector> member_descriptions;
    member_descriptions.reserve(member_ids.size());
    for (const std::string& id : member_ids)
        member_descriptions.push_back(describe(scene.find_region(id), reg));
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scene.region_count(); ++i) {
        const Region& r = scene.region_at(i);
        if (any_match(describe(r, reg), member_descriptions, reg.tolerance))
            out.push_back(r.id());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace proxregio
