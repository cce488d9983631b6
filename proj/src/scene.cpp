#include "proxregio/scene.hpp"

#include <algorithm>
#include <cmath>

#include "proxregio/errors.hpp"

namespace proxregio {

namespace {

// Measure of region geometry inside an axis-aligned cell rectangle: clipped
// area for solid regions, clipped boundary length for wireframes.
double cell_measure(const Region& r, const Ring& rect, const Box& rect_box) {
    if (r.is_hole_region()) {
        double len = 0.0;
        for (const Ring* ring : r.rings()) {
            const std::size_t n = ring->size();
            for (std::size_t i = 0; i < n; ++i) {
                Point2 a = (*ring)[i];
                Point2 b = (*ring)[(i + 1) % n];
                if (clip_segment_to_box(a, b, rect_box)) len += dist(a, b);
            }
        }
        return len;
    }
    Ring piece = clip_ring_convex(r.outer(), rect);
    if (piece.size() < 3) return 0.0;
    double area = std::abs(ring_signed_area(piece));
    for (const Ring& h : r.holes()) {
        Ring hp = clip_ring_convex(reversed_ring(h), rect);
        if (hp.size() >= 3) area -= std::abs(ring_signed_area(hp));
    }
    return area;
}

bool boundary_touches_rect(const Region& r, const Box& rect_box) {
    for (const Ring* ring : r.rings()) {
        const std::size_t n = ring->size();
        for (std::size_t i = 0; i < n; ++i) {
            Point2 a = (*ring)[i];
            Point2 b = (*ring)[(i + 1) % n];
            if (clip_segment_to_box(a, b, rect_box)) return true;
        }
    }
    return false;
}

// A point of the region inside the rectangle, preferring depth away from the
// owner's boundary; scans successively finer lattices.
std::optional<Point2> representative_point(const Region& r, const Box& rect_box) {
    if (r.is_hole_region()) {
        // Midpoint of the first boundary piece crossing the cell.
        for (const Ring* ring : r.rings()) {
            const std::size_t n = ring->size();
            for (std::size_t i = 0; i < n; ++i) {
                Point2 a = (*ring)[i];
                Point2 b = (*ring)[(i + 1) % n];
                if (clip_segment_to_box(a, b, rect_box) && dist(a, b) > 0.0)
                    return (a + b) * 0.5;
            }
        }
        return std::nullopt;
    }
    for (int res : {5, 9, 17, 33}) {
        std::optional<Point2> best;
        double best_depth = 0.0;
        for (int ix = 1; ix < res; ++ix) {
            for (int iy = 1; iy < res; ++iy) {
                const Point2 p{rect_box.lo.x + rect_box.width() * ix / res,
                               rect_box.lo.y + rect_box.height() * iy / res};
                if (!r.strictly_inside(p, 0.0)) continue;
                const double depth = r.boundary_distance(p);
                if (depth > best_depth) {
                    best_depth = depth;
                    best = p;
                }
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace

const SubregionCell* RegionGrid::find(CellKey key) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), key,
                               [](const SubregionCell& c, CellKey k) { return c.index < k; });
    if (it != cells.end() && it->index == key) return &*it;
    return nullptr;
}

RegionGrid subregion_grid(const Region& r, double cell_size, const Box& box) {
    if (cell_size <= 0.0) raise(ErrorKind::parameter, "subregion_grid: cell size must be positive");
    RegionGrid grid;
    const Box& bb = r.bbox();
    const int i0 = static_cast<int>(std::floor((bb.lo.x - box.lo.x) / cell_size));
    const int i1 = static_cast<int>(std::floor((bb.hi.x - box.lo.x) / cell_size));
    const int j0 = static_cast<int>(std::floor((bb.lo.y - box.lo.y) / cell_size));
    const int j1 = static_cast<int>(std::floor((bb.hi.y - box.lo.y) / cell_size));
    const double noise = 1e-12 * std::max(1.0, cell_size * cell_size);
    for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
            const Box rect_box{{box.lo.x + i * cell_size, box.lo.y + j * cell_size},
                               {box.lo.x + (i + 1) * cell_size, box.lo.y + (j + 1) * cell_size}};
            const auto c = rect_box.corners();
            const Ring rect(c.begin(), c.end());
            const double m = cell_measure(r, rect, rect_box);
            if (m <= noise) continue;
            SubregionCell cell;
            cell.owner = r.id();
            cell.index = {i, j};
            cell.measure = m;
            if (r.is_hole_region()) {
                cell.polygon = rect;
                cell.interior_cell = false;
            } else {
                cell.polygon = simplify_ring(clip_ring_convex(r.outer(), rect));
                bool touched = boundary_touches_rect(r, rect_box);
                if (!touched) {
                    for (const Point2& corner : c)
                        if (!r.strictly_inside(corner, 1e-12)) { touched = true; break; }
                }
                cell.interior_cell = !touched;
            }
            auto rep = representative_point(r, rect_box);
            if (!rep) continue;  // sliver thinner than the finest scan lattice
            cell.representative = *rep;
            if (cell.interior_cell) ++grid.interior_count;
            grid.cells.push_back(std::move(cell));
        }
    }
    std::sort(grid.cells.begin(), grid.cells.end(),
              [](const SubregionCell& a, const SubregionCell& b) { return a.index < b.index; });
    return grid;
}

Scene::Scene(Box box, double epsilon, double cell_size, ProbeRegistry registry,
             std::vector<Region> regions, std::vector<PhysicalString> strings,
             std::vector<AntipodalGrid> grids)
    : box_(std::move(box)),
      epsilon_(epsilon),
      cell_size_(cell_size),
      registry_(std::move(registry)),
      regions_(std::move(regions)),
      strings_(std::move(strings)),
      grids_(std::move(grids)) {
    if (epsilon_ <= 0.0) raise(ErrorKind::parameter, "scene: epsilon must be positive");
    if (cell_size_ <= epsilon_) raise(ErrorKind::parameter, "scene: cell size must exceed epsilon");
    if (cell_size_ >= box_.diagonal())
        raise(ErrorKind::parameter, "scene: cell size must be below the box diagonal");
    if (box_.width() <= 0.0 || box_.height() <= 0.0)
        raise(ErrorKind::parameter, "scene: box must have positive extent");

    for (std::size_t i = 0; i < regions_.size(); ++i) ordered_.push_back({false, i});
    for (std::size_t i = 0; i < strings_.size(); ++i) ordered_.push_back({true, i});

    const double slack = 1e-9 * box_.diagonal();
    for (std::size_t idx = 0; idx < ordered_.size(); ++idx) {
        const Region& r = resolve(ordered_[idx]);
        if (!region_index_.emplace(r.id(), idx).second)
            raise(ErrorKind::parameter, "scene: duplicate region id '" + r.id() + "'");
        for (const Ring* ring : r.rings())
            for (const Point2& p : *ring)
                if (!box_.contains(p, slack))
                    raise(ErrorKind::parameter, "scene: region '" + r.id() + "' leaves the box");
        grids_by_region_.push_back(subregion_grid(r, cell_size_, box_));
        for (const SubregionCell& cell : grids_by_region_.back().cells)
            coverage_[cell.index].push_back(idx);
    }
}

const Region& Scene::resolve(const Entry& e) const {
    return e.from_string ? strings_[e.idx].region : regions_[e.idx];
}

const Region& Scene::region_at(std::size_t idx) const {
    if (idx >= ordered_.size()) raise(ErrorKind::lookup, "scene: region index out of range");
    return resolve(ordered_[idx]);
}

const Region* Scene::try_find_region(const std::string& id) const {
    auto it = region_index_.find(id);
    if (it == region_index_.end()) return nullptr;
    return &resolve(ordered_[it->second]);
}

const Region& Scene::find_region(const std::string& id) const {
    const Region* r = try_find_region(id);
    if (!r) raise(ErrorKind::lookup, "scene: unknown region id '" + id + "'");
    return *r;
}

const AntipodalGrid& Scene::find_grid(const std::string& id) const {
    for (const AntipodalGrid& g : grids_)
        if (g.id() == id) return g;
    raise(ErrorKind::lookup, "scene: unknown grid id '" + id + "'");
}

const RegionGrid& Scene::grid_of(const std::string& id) const {
    auto it = region_index_.find(id);
    if (it == region_index_.end()) raise(ErrorKind::lookup, "scene: unknown region id '" + id + "'");
    return grids_by_region_[it->second];
}

const RegionGrid& Scene::grid_at(std::size_t idx) const {
    if (idx >= grids_by_region_.size()) raise(ErrorKind::lookup, "scene: region index out of range");
    return grids_by_region_[idx];
}

const std::vector<std::size_t>& Scene::covering(CellKey key) const {
    auto it = coverage_.find(key);
    if (it == coverage_.end()) return empty_cover_;
    return it->second;
}

CellKey Scene::key_of(Point2 p) const {
    return {static_cast<int>(std::floor((p.x - box_.lo.x) / cell_size_)),
            static_cast<int>(std::floor((p.y - box_.lo.y) / cell_size_))};
}

Ring Scene::cell_rect(CellKey key) const {
    const Box rect{{box_.lo.x + key.i * cell_size_, box_.lo.y + key.j * cell_size_},
                   {box_.lo.x + (key.i + 1) * cell_size_, box_.lo.y + (key.j + 1) * cell_size_}};
    const auto c = rect.corners();
    return Ring(c.begin(), c.end());
}

bool Scene::is_universe(const Region& r) const {
    if (r.is_hole_region() || !r.holes().empty()) return false;
    const double box_area = box_.width() * box_.height();
    return r.measures().area >= box_area * (1.0 - 1e-9);
}

} // namespace proxregio
