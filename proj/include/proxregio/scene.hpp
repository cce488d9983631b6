#pragma once

#include <map>
#include <string>
#include <vector>

#include "proxregio/bundles.hpp"
#include "proxregio/description.hpp"
#include "proxregio/region.hpp"
#include "proxregio/strings.hpp"

namespace proxregio {

struct CellKey {
    int i = 0;
    int j = 0;

    friend bool operator==(CellKey a, CellKey b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(CellKey a, CellKey b) {
        return a.i < b.i || (a.i == b.i && a.j < b.j);
    }
};

// One grid cell of a region's decomposition.  For solid regions the measure
// is the clipped area; for wireframe regions it is the boundary length inside
// the cell and the polygon is the cell rectangle.
struct SubregionCell {
    std::string owner;
    CellKey index;
    Ring polygon;
    double measure = 0.0;
    bool interior_cell = false;  // cell rectangle disjoint from the owner's boundary
    Point2 representative;       // a point of the owner inside the cell
};

struct RegionGrid {
    std::vector<SubregionCell> cells;  // sorted by key
    int interior_count = 0;

    const SubregionCell* find(CellKey key) const;
};

// Decomposes a region into grid cells of the given pitch anchored at the box
// minimum corner.  Cells with measure below noise are dropped.
RegionGrid subregion_grid(const Region& r, double cell_size, const Box& box);

// An immutable scene: the bounded universe, spatial tolerance, grid pitch,
// probe registry, and the registered regions, strings and antipodal grids.
// Region grids and the cell coverage map are precomputed at construction.
class Scene {
public:
    Scene(Box box, double epsilon, double cell_size, ProbeRegistry registry,
          std::vector<Region> regions, std::vector<PhysicalString> strings = {},
          std::vector<AntipodalGrid> grids = {});

    const Box& box() const { return box_; }
    double epsilon() const { return epsilon_; }
    double cell_size() const { return cell_size_; }
    const ProbeRegistry& registry() const { return registry_; }

    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<PhysicalString>& strings() const { return strings_; }
    const std::vector<AntipodalGrid>& grids() const { return grids_; }

    // Every region participating in relations: declared regions first, then
    // the band regions of the strings, in declaration order.
    std::size_t region_count() const { return region_index_.size(); }
    const Region& region_at(std::size_t idx) const;
    const Region& find_region(const std::string& id) const;       // lookup error when absent
    const Region* try_find_region(const std::string& id) const;
    const AntipodalGrid& find_grid(const std::string& id) const;

    const RegionGrid& grid_of(const std::string& id) const;
    const RegionGrid& grid_at(std::size_t idx) const;

    // Indices (into region_at order) of all regions covering a cell key.
    const std::vector<std::size_t>& covering(CellKey key) const;

    CellKey key_of(Point2 p) const;
    Ring cell_rect(CellKey key) const;

    // A region spanning the whole box acts as the universe X in the axioms.
    bool is_universe(const Region& r) const;

private:
    Box box_;
    double epsilon_;
    double cell_size_;
    ProbeRegistry registry_;
    std::vector<Region> regions_;
    std::vector<PhysicalString> strings_;
    std::vector<AntipodalGrid> grids_;

    // Participating regions in order: entries index regions_ or strings_
    // (copy/move safe, unlike raw pointers).
    struct Entry {
        bool from_string = false;
        std::size_t idx = 0;
    };
    std::vector<Entry> ordered_;
    const Region& resolve(const Entry& e) const;
    std::map<std::string, std::size_t> region_index_;
    std::vector<RegionGrid> grids_by_region_;
    std::map<CellKey, std::vector<std::size_t>> coverage_;
    std::vector<std::size_t> empty_cover_;
};

} // namespace proxregio
