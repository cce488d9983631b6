#include "proxregio/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "proxregio/errors.hpp"
#include "proxregio/parallelism.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

// --- descriptive fibre spaces -------------------------------------------------

FibreSpace build_fibre_space(const RegionClass& cls, const Scene& scene,
                             const ProbeRegistry& reg) {
    if (cls.members.empty())
        raise(ErrorKind::precondition, "fibre space needs a nonempty class");
    FibreSpace fs;
    fs.total = cls;
    fs.tolerance = reg.tolerance;
    for (const std::string& m : cls.members) {
        const FeatureVector v = describe(scene.find_region(m), reg);
        fs.projection.emplace(m, v);
        bool known = false;
        for (const FeatureVector& seen : fs.base)
            if (features_match(seen, v, fs.tolerance)) { known = true; break; }
        if (!known) fs.base.push_back(v);
    }
    return fs;
}

FibreResult fibre(const FibreSpace& fs, const FeatureVector& v) {
    FibreResult out;
    for (const FeatureVector& seen : fs.base)
        if (features_match(seen, v, fs.tolerance)) { out.found = true; break; }
    if (!out.found) return out;
    for (const auto& [member, desc] : fs.projection)
        if (features_match(desc, v, fs.tolerance)) out.member_ids.push_back(member);
    return out;  // map iteration keeps the ids sorted
}

bool is_sheaf(const FibreSpace& fs) {
    // Bijection onto the base at finite scale: every fibre is a singleton.
    for (const FeatureVector& v : fs.base)
        if (fibre(fs, v).member_ids.size() != 1) return false;
    return fs.base.size() == fs.total.members.size();
}

ParallelVerdict bundles_parallel(const FibreSpace& a, const FibreSpace& b, const Scene& scene,
                                 Point2 direction, bool descriptive) {
    if (!is_sheaf(a) || !is_sheaf(b))
        raise(ErrorKind::precondition, "bundle parallelism requires sheaf fibre spaces");
    // The bundle is the union of the fibres; rebuild each class from that
    // union so the verdict is literally computed on the preimages.
    auto union_class = [](const FibreSpace& fs) {
        RegionClass cls = fs.total;
        std::set<std::string> members;
        for (const FeatureVector& v : fs.base)
            for (const std::string& m : fibre(fs, v).member_ids) members.insert(m);
        cls.members.assign(members.begin(), members.end());
        return cls;
    };
    const RegionClass ua = union_class(a);
    const RegionClass ub = union_class(b);
    if (ua.members != a.total.members || ub.members != b.total.members)
        raise(ErrorKind::internal, "fibres do not partition the class");
    return classes_parallel(ua, ub, scene, ua.registry, direction, descriptive);
}

// --- antipodal grids -----------------------------------------------------------

const char* grid_topology_name(GridTopology t) {
    switch (t) {
        case GridTopology::circle: return "circle";
        case GridTopology::sphere_latlong: return "sphere_latlong";
        case GridTopology::torus: return "torus";
    }
    return "?";
}

std::optional<GridTopology> grid_topology_from_name(const std::string& name) {
    if (name == "circle") return GridTopology::circle;
    if (name == "sphere_latlong") return GridTopology::sphere_latlong;
    if (name == "torus") return GridTopology::torus;
    return std::nullopt;
}

AntipodalGrid::AntipodalGrid(std::string id, GridTopology topology, int rows, int cols,
                             const Box& box)
    : id_(std::move(id)), topology_(topology), rows_(rows), cols_(cols) {
    if (cols_ < 2 || cols_ % 2 != 0)
        raise(ErrorKind::parameter, "antipodal grid needs an even column count of at least 2");
    switch (topology_) {
        case GridTopology::circle:
            if (rows_ != 1) raise(ErrorKind::parameter, "circle grid must have exactly one row");
            break;
        case GridTopology::sphere_latlong:
            if (rows_ < 2) raise(ErrorKind::parameter, "sphere grid needs at least two rows");
            break;
        case GridTopology::torus:
            if (rows_ < 2 || rows_ % 2 != 0)
                raise(ErrorKind::parameter, "torus grid needs an even row count of at least 2");
            break;
    }

    const double W = box.width();
    const double H = box.height();
    if (W <= 0.0 || H <= 0.0) raise(ErrorKind::parameter, "antipodal grid box must have extent");
    cells_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));

    // Cell areas are written from one shared expression per congruence class
    // so a cell and its antipode carry byte-identical measures.
    if (topology_ == GridTopology::circle) {
        const Point2 center{box.lo.x + W / 2.0, box.lo.y + H / 2.0};
        const double r1 = 0.45 * std::min(W, H);
        const double r0 = 0.30 * std::min(W, H);
        const double dtheta = 2.0 * M_PI / cols_;
        const double sector_area = 0.5 * (r1 * r1 - r0 * r0) * dtheta;
        for (int c = 0; c < cols_; ++c) {
            const double t0 = c * dtheta;
            const double t1 = (c + 1) * dtheta;
            GridCell cell;
            cell.row = 0;
            cell.col = c;
            cell.polygon = {center + Point2{r0 * std::cos(t0), r0 * std::sin(t0)},
                            center + Point2{r1 * std::cos(t0), r1 * std::sin(t0)},
                            center + Point2{r1 * std::cos(t1), r1 * std::sin(t1)},
                            center + Point2{r0 * std::cos(t1), r0 * std::sin(t1)}};
            cell.area = sector_area;
            cells_.push_back(std::move(cell));
        }
    } else if (topology_ == GridTopology::torus) {
        const double cw = W / cols_;
        const double ch = H / rows_;
        const double cell_area = cw * ch;
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) {
                GridCell cell;
                cell.row = r;
                cell.col = c;
                const double x0 = box.lo.x + c * cw, x1 = box.lo.x + (c + 1) * cw;
                const double y0 = box.lo.y + r * ch, y1 = box.lo.y + (r + 1) * ch;
                cell.polygon = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
                cell.area = cell_area;
                cells_.push_back(std::move(cell));
            }
        }
    } else {
        // Latitude rows between the excluded polar caps; row height scales
        // with cos(latitude) and the height table is mirrored around the
        // equator, so antipodal rows get byte-identical heights.
        std::vector<double> heights(static_cast<std::size_t>(rows_), 0.0);
        for (int r = 0; r < (rows_ + 1) / 2; ++r) {
            const double lat = M_PI * ((r + 0.5) / rows_ - 0.5);
            const double h = std::cos(lat);
            heights[static_cast<std::size_t>(r)] = h;
            heights[static_cast<std::size_t>(rows_ - 1 - r)] = h;
        }
        double total = 0.0;
        for (double h : heights) total += h;
        const double scale = (H * 0.9) / total;
        const double cw = W / cols_;
        double y = box.lo.y + H * 0.05;
        for (int r = 0; r < rows_; ++r) {
            const double ch = heights[static_cast<std::size_t>(r)] * scale;
            const double row_area = cw * ch;
            for (int c = 0; c < cols_; ++c) {
                GridCell cell;
                cell.row = r;
                cell.col = c;
                const double x0 = box.lo.x + c * cw, x1 = box.lo.x + (c + 1) * cw;
                cell.polygon = {{x0, y}, {x1, y}, {x1, y + ch}, {x0, y + ch}};
                cell.area = row_area;
                cells_.push_back(std::move(cell));
            }
            y += ch;
        }
        // Antipodal rows share a height expression but not a y offset; areas
        // depend only on the height, which is mirrored exactly.
        for (int r = 0; r < rows_ / 2; ++r)
            if (heights[static_cast<std::size_t>(r)] !=
                heights[static_cast<std::size_t>(rows_ - 1 - r)])
                raise(ErrorKind::internal, "sphere grid height table is not symmetric");
    }

    // The involution must be fixed-point-free and self-inverse on every cell.
    for (int i = 0; i < cell_count(); ++i) {
        const int j = antipode(i);
        if (j == i) raise(ErrorKind::internal, "antipode has a fixed cell");
        if (antipode(j) != i) raise(ErrorKind::internal, "antipode is not an involution");
    }
}

int AntipodalGrid::antipode(int flat_index) const {
    if (flat_index < 0 || flat_index >= cell_count())
        raise(ErrorKind::lookup, "antipodal grid cell index out of range");
    const int r = flat_index / cols_;
    const int c = flat_index % cols_;
    const int oc = (c + cols_ / 2) % cols_;
    switch (topology_) {
        case GridTopology::circle:
            return oc;
        case GridTopology::sphere_latlong:
            return (rows_ - 1 - r) * cols_ + oc;
        case GridTopology::torus:
            return ((r + rows_ / 2) % rows_) * cols_ + oc;
    }
    return flat_index;
}

void AntipodalGrid::set_field(std::vector<FeatureVector> field) {
    if (static_cast<int>(field.size()) != cell_count())
        raise(ErrorKind::parameter, "field must provide one vector per grid cell");
    std::size_t width = field.empty() ? 0 : field.front().values.size();
    for (const FeatureVector& v : field)
        if (v.values.size() != width)
            raise(ErrorKind::dimension, "field vectors must share one width");
    field_ = std::move(field);
}

void AntipodalGrid::set_color_field(const std::vector<std::array<double, 3>>& colors) {
    if (static_cast<int>(colors.size()) != cell_count())
        raise(ErrorKind::parameter, "color field must provide one color per grid cell");
    std::vector<FeatureVector> field;
    field.reserve(colors.size());
    for (int i = 0; i < cell_count(); ++i) {
        const auto& c = colors[static_cast<std::size_t>(i)];
        field.push_back({{cells_[static_cast<std::size_t>(i)].area, c[0], c[1], c[2]}});
    }
    set_field(std::move(field));
}

std::optional<AntipodalMatch> find_antipodal_match(const AntipodalGrid& grid) {
    if (static_cast<int>(grid.field().size()) != grid.cell_count())
        raise(ErrorKind::precondition, "antipodal search needs a field on every cell");
    for (int i = 0; i < grid.cell_count(); ++i) {
        const int j = grid.antipode(i);
        const FeatureVector& fi = grid.field()[static_cast<std::size_t>(i)];
        const FeatureVector& fj = grid.field()[static_cast<std::size_t>(j)];
        if (fi.values.size() == fj.values.size() && features_match(fi, fj, grid.tolerance()))
            return AntipodalMatch{i, j, fi};
    }
    return std::nullopt;
}

// --- wired-friend shape descriptors --------------------------------------------

ShapeDescriptor make_shape_descriptor(const Region& reference, const ProbeRegistry& reg,
                                      double ball_radius) {
    if (ball_radius <= 0.0) raise(ErrorKind::parameter, "descriptor ball radius must be positive");
    for (const Probe& p : reg.probes) {
        switch (p.kind) {
            case ProbeKind::area:
            case ProbeKind::perimeter:
            case ProbeKind::diameter:
            case ProbeKind::convexity:
            case ProbeKind::hole_count:
            case ProbeKind::curvature_proxy:
                break;
            default:
                raise(ErrorKind::configuration,
                      "shape descriptors need congruence-invariant probes; '" + p.name +
                          "' depends on the feature store");
        }
    }
    ShapeDescriptor d;
    d.registry = reg;
    d.ball_radius = ball_radius;
    d.reference = describe(reference, reg);
    return d;
}

WiredFriendResult wired_friend_map(const ShapeDescriptor& descriptor, const Region& candidate) {
    WiredFriendResult out;
    out.vector = describe(candidate, descriptor.registry);
    out.distance = feature_distance(out.vector, descriptor.reference);
    out.in_ball = out.distance <= descriptor.ball_radius;
    return out;
}

} // namespace proxregio
