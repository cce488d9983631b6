#include "proxregio/strings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxregio/errors.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

namespace {

constexpr double kJoinTol = 1e-12;

void validate_spine(const std::vector<Point2>& spine, bool closed) {
    if (spine.size() < 2) raise(ErrorKind::invalid_spine, "string spine needs at least two points");
    const std::size_t n = closed ? spine.size() - 1 : spine.size();
    if (closed && n < 3)
        raise(ErrorKind::invalid_spine, "closed string spine needs at least three points");
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        if (dist(spine[i], spine[i + 1]) <= kJoinTol)
            raise(ErrorKind::invalid_spine, "string spine repeats a point");
    // No segment may cross or overlap a non-adjacent segment; adjacent
    // segments may share only their common endpoint.  A closed spine carries
    // its first point again at the end, so consecutive indexing covers the
    // wrap-around segment too.
    const std::size_t segs = spine.size() - 1;
    for (std::size_t i = 0; i < segs; ++i) {
        const Point2 a1 = spine[i], a2 = spine[i + 1];
        for (std::size_t j = i + 1; j < segs; ++j) {
            const Point2 b1 = spine[j], b2 = spine[j + 1];
            const bool adjacent = j == i + 1 || (closed && i == 0 && j == segs - 1);
            if (adjacent) {
                if (collinear_overlap(a1, a2, b1, b2, nullptr, nullptr, 1e-9, kJoinTol) > kJoinTol)
                    raise(ErrorKind::invalid_spine, "string spine doubles back on itself");
                continue;
            }
            if (segments_intersect(a1, a2, b1, b2))
                raise(ErrorKind::invalid_spine, "string spine crosses itself");
        }
    }
}

} // namespace

bool PhysicalString::closed() const {
    return spine.size() >= 4 && dist(spine.front(), spine.back()) <= kJoinTol;
}

bool PhysicalString::straight(double angle_tol) const {
    if (spine.size() < 2) return false;
    if (closed()) return false;
    const Point2 u = spine[1] - spine[0];
    const double lu = norm(u);
    for (std::size_t i = 1; i + 1 < spine.size(); ++i) {
        const Point2 v = spine[i + 1] - spine[i];
        if (std::abs(cross(u, v)) > angle_tol * lu * norm(v)) return false;
        if (dot(u, v) <= 0.0) return false;
    }
    return true;
}

double PhysicalString::length() const {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) len += dist(spine[i], spine[i + 1]);
    return len;
}

PhysicalString make_string(const std::string& id, std::vector<Point2> spine, double width,
                           const Scene& scene) {
    if (width <= 0.0) raise(ErrorKind::parameter, "string width must be positive");
    const bool closed = spine.size() >= 4 && dist(spine.front(), spine.back()) <= kJoinTol;
    validate_spine(spine, closed);

    const double half = width / 2.0;
    std::optional<Region> band;
    if (closed) {
        Ring core(spine.begin(), spine.end() - 1);
        if (!ring_is_ccw(core)) core = reversed_ring(core);
        if (!ring_is_simple(core)) raise(ErrorKind::invalid_spine, "closed string spine crosses itself");
        const Ring outer = offset_ring_outward(core, half);
        auto inner = offset_ring_inward(core, half);
        std::vector<Ring> holes;
        if (inner) holes.push_back(*inner);  // spine loop wider than the band: annulus
        try {
            band.emplace(id, outer, std::move(holes));
        } catch (const Error& e) {
            raise(ErrorKind::invalid_spine, std::string("closed string band degenerate: ") + e.what());
        }
    } else {
        try {
            band.emplace(id, buffer_open_polyline(spine, half));
        } catch (const Error& e) {
            raise(ErrorKind::invalid_spine, std::string("string band degenerate: ") + e.what());
        }
    }
    PhysicalString s{id, std::move(spine), width, std::move(*band)};

    const double slack = 1e-9 * scene.box().diagonal();
    for (const Ring* ring : s.region.rings())
        for (const Point2& p : *ring)
            if (!scene.box().contains(p, slack))
                raise(ErrorKind::precondition, "string '" + id + "' band leaves the scene box");
    return s;
}

namespace {

// Cech distance between a band region and a raw polygon piece (no Region is
// constructed from the piece, which may carry degenerate clip edges).
double band_piece_distance(const Region& band, const Ring& piece) {
    for (const Point2& p : piece)
        if (band.contains(p, 1e-12)) return 0.0;
    if (!band.is_hole_region() && !piece.empty() && !band.outer().empty()) {
        // Band vertex inside the piece.
        if (ring_is_ccw(piece) ? ring_contains(piece, band.outer().front())
                               : ring_contains(reversed_ring(piece), band.outer().front()))
            return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    const std::size_t np = piece.size();
    for (const Ring* ring : band.rings()) {
        const std::size_t nb = ring->size();
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < np; ++j)
                best = std::min(best, segment_distance((*ring)[i], (*ring)[(i + 1) % nb],
                                                       piece[j], piece[(j + 1) % np]));
    }
    return best;
}

} // namespace

WorldsheetVerdict is_worldsheet(const Region& region, const std::vector<PhysicalString>& strings,
                                const Scene& scene) {
    WorldsheetVerdict verdict;
    const RegionGrid* grid = nullptr;
    RegionGrid local;
    if (scene.try_find_region(region.id()) != nullptr) {
        grid = &scene.grid_of(region.id());
    } else {
        local = subregion_grid(region, scene.cell_size(), scene.box());
        grid = &local;
    }
    for (const SubregionCell& cell : grid->cells) {
        bool covered = false;
        for (const PhysicalString& s : strings) {
            if (s.region.contains(cell.representative, 1e-9) ||
                band_piece_distance(s.region, cell.polygon) <= scene.epsilon()) {
                covered = true;
                break;
            }
        }
        if (!covered) verdict.uncovered_cells.push_back({cell.index.i, cell.index.j});
    }
    verdict.covered = verdict.uncovered_cells.empty() && !grid->cells.empty();
    return verdict;
}

Cylinder roll_cylinder(double sheet_width, double sheet_length) {
    if (sheet_width <= 0.0 || sheet_length <= 0.0)
        raise(ErrorKind::parameter, "cylinder sheet sides must be positive");
    Cylinder c;
    c.radius = sheet_width / (2.0 * M_PI);
    // Rolling is an isometry of the sheet: the lateral area is exactly the
    // sheet area, not a resampled approximation.
    c.lateral_area = sheet_width * sheet_length;
    return c;
}

} // namespace proxregio
