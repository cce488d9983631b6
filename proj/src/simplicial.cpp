#include "proxregio/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "proxregio/errors.hpp"
#include "proxregio/proximity.hpp"

namespace proxregio {

bool is_simplex(const std::vector<Point2>& points, double tol) {
    if (points.empty()) return false;  // the empty set spans no simplex
    if (points.size() == 1) return true;
    if (points.size() == 2) return dist(points[0], points[1]) > tol;
    if (points.size() == 3) {
        if (dist(points[0], points[1]) <= tol || dist(points[0], points[2]) <= tol ||
            dist(points[1], points[2]) <= tol)
            return false;
        return std::abs(cross(points[1] - points[0], points[2] - points[0])) > tol;
    }
    raise(ErrorKind::dimension, "is_simplex: more than 3 points cannot be independent in the plane");
}

bool SimplicialComplex::has_simplex(const SimplexIndices& s) const {
    SimplexIndices sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (const SimplexIndices& t : simplices)
        if (t == sorted) return true;
    return false;
}

namespace {

std::string simplex_label(const SimplexIndices& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

// Geometric intersection tests between low-dimensional simplices, tolerant to
// tol.  Each returns true when the pair meets somewhere outside the geometry
// of their common face.
bool edges_clash(Point2 a1, Point2 a2, Point2 b1, Point2 b2, const std::vector<int>& shared,
                 const std::vector<Point2>& pts, double tol) {
    if (shared.empty()) return segment_distance(a1, a2, b1, b2) <= tol;
    // Shared vertex: the segments may touch only there.  Any collinear
    // overlap or a crossing elsewhere is a violation.
    if (collinear_overlap(a1, a2, b1, b2, nullptr, nullptr, 1e-9, tol) > tol) return true;
    const Point2 s = pts[static_cast<std::size_t>(shared[0])];
    // Check the far endpoints against the other segment.
    for (const Point2& e : {a1, a2})
        if (dist(e, s) > tol && segment_point_distance(b1, b2, e) <= tol) return true;
    for (const Point2& e : {b1, b2})
        if (dist(e, s) > tol && segment_point_distance(a1, a2, e) <= tol) return true;
    return false;
}

double triangle_pair_area(Point2 a, Point2 b, Point2 c, Point2 d, Point2 e, Point2 f) {
    Ring t1{a, b, c};
    Ring t2{d, e, f};
    if (!ring_is_ccw(t1)) t1 = reversed_ring(t1);
    if (!ring_is_ccw(t2)) t2 = reversed_ring(t2);
    return convex_intersection_area(t1, t2);
}

} // namespace

ComplexValidation validate_complex(const SimplicialComplex& c, double tol) {
    ComplexValidation out;
    const auto& pts = c.vertices;

    std::set<SimplexIndices> listed;
    for (const SimplexIndices& s : c.simplices) {
        SimplexIndices sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() > 3)
            out.violations.push_back("simplex " + simplex_label(s) + " exceeds dimension 2");
        for (int v : sorted)
            if (v < 0 || v >= static_cast<int>(pts.size()))
                out.violations.push_back("simplex " + simplex_label(s) + " references a missing vertex");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            out.violations.push_back("simplex " + simplex_label(s) + " repeats a vertex");
        if (!listed.insert(sorted).second)
            out.violations.push_back("simplex " + simplex_label(s) + " is listed twice");
    }
    if (!out.violations.empty()) return out;

    // Face closure: every proper subset of a listed simplex must be listed.
    for (const SimplexIndices& s : listed) {
        if (s.size() <= 1) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            SimplexIndices face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) face.push_back(s[i]);
            if (!listed.count(face))
                out.violations.push_back("face " + simplex_label(face) + " of " + simplex_label(s) +
                                         " is not listed");
        }
    }

    // Distinct vertices must sit at distinct points.
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (dist(pts[i].center, pts[j].center) <= tol)
                out.violations.push_back("vertices " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");

    // Pairwise geometric intersections must equal the common face.
    std::vector<SimplexIndices> sims(listed.begin(), listed.end());
    for (std::size_t i = 0; i < sims.size(); ++i) {
        for (std::size_t j = i + 1; j < sims.size(); ++j) {
            const SimplexIndices& s = sims[i];
            const SimplexIndices& t = sims[j];
            std::vector<int> shared;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(shared));
            auto at = [&](const SimplexIndices& v, std::size_t k) {
                return pts[static_cast<std::size_t>(v[k])].center;
            };
            bool clash = false;
            if (s.size() == 1 && t.size() == 1) {
                clash = false;  // distinct points already checked
            } else if (s.size() == 1 || t.size() == 1) {
                const SimplexIndices& v = s.size() == 1 ? s : t;
                const SimplexIndices& e = s.size() == 1 ? t : s;
                if (!shared.empty()) {
                    clash = false;  // the vertex is a face of the edge/triangle
                } else if (e.size() == 2) {
                    clash = segment_point_distance(at(e, 0), at(e, 1), at(v, 0)) <= tol;
                } else {
                    Ring tri{at(e, 0), at(e, 1), at(e, 2)};
                    clash = ring_contains(tri, at(v, 0)) ||
                            ring_boundary_distance(tri, at(v, 0)) <= tol;
                }
            } else if (s.size() == 2 && t.size() == 2) {
                std::vector<Point2> centers;
                for (const ComplexVertex& v : pts) centers.push_back(v.center);
                clash = edges_clash(at(s, 0), at(s, 1), at(t, 0), at(t, 1), shared, centers, tol);
            } else {
                // At least one triangle: any positive-area overlap beyond a
                // shared edge, or contact without a shared face, clashes.
                const double overlap =
                    s.size() == 3 && t.size() == 3
                        ? triangle_pair_area(at(s, 0), at(s, 1), at(s, 2), at(t, 0), at(t, 1), at(t, 2))
                        : 0.0;
                if (s.size() == 3 && t.size() == 3) {
                    if (overlap > tol) clash = true;
                } else {
                    // triangle vs edge
                    const SimplexIndices& tri = s.size() == 3 ? s : t;
                    const SimplexIndices& ed = s.size() == 3 ? t : s;
                    const Ring tring{at(tri, 0), at(tri, 1), at(tri, 2)};
                    if (shared.size() == 2) {
                        clash = false;  // the edge is a face of the triangle
                    } else if (shared.size() == 1) {
                        // May touch only at the shared vertex.
                        const Point2 far_pt =
                            dist(at(ed, 0), pts[static_cast<std::size_t>(shared[0])].center) > tol
                                ? at(ed, 0)
                                : at(ed, 1);
                        const Point2 mid = (far_pt + pts[static_cast<std::size_t>(shared[0])].center) * 0.5;
                        clash = ring_contains(tring, far_pt) || ring_contains(tring, mid);
                    } else {
                        clash = ring_contains(tring, at(ed, 0)) || ring_contains(tring, at(ed, 1));
                        for (std::size_t e = 0; e < 3 && !clash; ++e)
                            clash = segment_distance(tring[e], tring[(e + 1) % 3], at(ed, 0),
                                                     at(ed, 1)) <= tol;
                    }
                }
            }
            if (clash)
                out.violations.push_back("simplices " + simplex_label(s) + " and " +
                                         simplex_label(t) + " meet outside a common face");
        }
    }

    out.valid = out.violations.empty();
    return out;
}

std::vector<FeatureVector> complex_description(const SimplicialComplex& c, const Scene& scene,
                                               const ProbeRegistry& reg) {
    std::vector<FeatureVector> out;
    out.reserve(c.vertices.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const ComplexVertex& v = c.vertices[i];
        Region disk("vertex#" + std::to_string(i), disk_ring(v.center, v.radius));
        (void)scene;
        out.push_back(describe(disk, reg));
    }
    return out;
}

namespace {

struct AnchorPair {
    double distance = 0.0;
    const SubregionCell* a_cell = nullptr;
    const SubregionCell* b_cell = nullptr;
};

// A point of the region inside the cell at depth >= min_depth from the
// region's boundary; refines around the cell representative if needed.
std::optional<Point2> anchored_point(const Region& r, const SubregionCell& cell,
                                     const Scene& scene, double min_depth) {
    if (r.boundary_distance(cell.representative) >= min_depth &&
        r.strictly_inside(cell.representative, 0.0))
        return cell.representative;
    const Ring rect = scene.cell_rect(cell.index);
    const Box b = ring_bbox(rect);
    for (int res : {9, 17, 33, 65}) {
        std::optional<Point2> best;
        double best_depth = min_depth;
        for (int ix = 1; ix < res; ++ix) {
            for (int iy = 1; iy < res; ++iy) {
                const Point2 p{b.lo.x + b.width() * ix / res, b.lo.y + b.height() * iy / res};
                if (!r.strictly_inside(p, 0.0)) continue;
                const double depth = r.boundary_distance(p);
                if (depth >= best_depth) {
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

SewResult sew(const Region& a, const Region& b, int k, const Scene& scene) {
    if (k < 1) raise(ErrorKind::parameter, "sew: k must be at least 1");
    if (cech_distance(a, b) <= scene.epsilon())
        raise(ErrorKind::precondition, "sew: regions must be disjoint");

    const RegionGrid& ga = scene.grid_of(a.id());
    const RegionGrid& gb = scene.grid_of(b.id());

    std::vector<const SubregionCell*> boundary_a, boundary_b;
    for (const SubregionCell& c : ga.cells)
        if (!c.interior_cell) boundary_a.push_back(&c);
    for (const SubregionCell& c : gb.cells)
        if (!c.interior_cell) boundary_b.push_back(&c);
    if (static_cast<int>(boundary_a.size()) < k || static_cast<int>(boundary_b.size()) < k)
        raise(ErrorKind::capacity, "sew: not enough boundary cells for " + std::to_string(k) +
                                       " bridges");

    // All facing pairs ordered by distance, ties by lexicographic cell index.
    std::vector<AnchorPair> pairs;
    pairs.reserve(boundary_a.size() * boundary_b.size());
    for (const SubregionCell* ca : boundary_a)
        for (const SubregionCell* cb : boundary_b)
            pairs.push_back({dist(ca->representative, cb->representative), ca, cb});
    std::sort(pairs.begin(), pairs.end(), [](const AnchorPair& x, const AnchorPair& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        if (!(x.a_cell->index == y.a_cell->index)) return x.a_cell->index < y.a_cell->index;
        return x.b_cell->index < y.b_cell->index;
    });

    // Greedily take the k closest pairs with fresh cells on both sides.
    std::vector<AnchorPair> chosen;
    std::set<std::pair<int, int>> used_a, used_b;
    for (const AnchorPair& p : pairs) {
        if (static_cast<int>(chosen.size()) == k) break;
        if (!used_a.insert({p.a_cell->index.i, p.a_cell->index.j}).second) continue;
        if (!used_b.insert({p.b_cell->index.i, p.b_cell->index.j}).second) {
            used_a.erase({p.a_cell->index.i, p.a_cell->index.j});
            continue;
        }
        chosen.push_back(p);
    }
    if (static_cast<int>(chosen.size()) < k)
        raise(ErrorKind::capacity, "sew: could not select " + std::to_string(k) +
                                       " distinct anchor pairs");

    // Order bridges along the facing front so they do not cross: sort both
    // sides by their projection onto the perpendicular of the axis between
    // the regions, then pair in order.
    const Point2 axis = b.measures().centroid - a.measures().centroid;
    const double axis_len = norm(axis);
    const Point2 perp_dir = axis_len > 0.0 ? perp(axis * (1.0 / axis_len)) : Point2{0.0, 1.0};
    std::vector<const SubregionCell*> side_a, side_b;
    for (const AnchorPair& p : chosen) {
        side_a.push_back(p.a_cell);
        side_b.push_back(p.b_cell);
    }
    auto by_projection = [&](const SubregionCell* x, const SubregionCell* y) {
        const double px = dot(x->representative, perp_dir);
        const double py = dot(y->representative, perp_dir);
        if (px != py) return px < py;
        return x->index < y->index;
    };
    std::sort(side_a.begin(), side_a.end(), by_projection);
    std::sort(side_b.begin(), side_b.end(), by_projection);

    SewResult result;
    result.a_id = a.id();
    result.b_id = b.id();
    result.vertex_radius = scene.epsilon() * 1e3;

    const double min_depth = 2.0 * result.vertex_radius;
    std::vector<Point2> pa, pb;
    for (int i = 0; i < k; ++i) {
        auto qa = anchored_point(a, *side_a[static_cast<std::size_t>(i)], scene, min_depth);
        auto qb = anchored_point(b, *side_b[static_cast<std::size_t>(i)], scene, min_depth);
        if (!qa || !qb)
            raise(ErrorKind::capacity, "sew: anchor cell too thin to hold a bridge vertex");
        pa.push_back(*qa);
        pb.push_back(*qb);
    }

    // Complex for one ladder drawing: vertices a0..a(k-1), b0..b(k-1) with the
    // sides walked in the given orders; bridge edges (ai, bi); chains
    // (ai, ai+1) and (bi, bi+1) inside each region.
    auto assemble = [&](const std::vector<int>& oa, const std::vector<int>& ob,
                        std::vector<Bridge>& bridges, SimplicialComplex& cx) {
        bridges.clear();
        cx = SimplicialComplex{};
        for (int i = 0; i < k; ++i) {
            Bridge br;
            br.a_cell = side_a[static_cast<std::size_t>(oa[static_cast<std::size_t>(i)])]->index;
            br.b_cell = side_b[static_cast<std::size_t>(ob[static_cast<std::size_t>(i)])]->index;
            br.a_anchor_point = pa[static_cast<std::size_t>(oa[static_cast<std::size_t>(i)])];
            br.b_anchor_point = pb[static_cast<std::size_t>(ob[static_cast<std::size_t>(i)])];
            bridges.push_back(br);
        }
        for (const Bridge& br : bridges) cx.vertices.push_back({br.a_anchor_point, result.vertex_radius});
        for (const Bridge& br : bridges) cx.vertices.push_back({br.b_anchor_point, result.vertex_radius});
        for (int i = 0; i < 2 * k; ++i) cx.simplices.push_back({i});
        for (int i = 0; i < k; ++i) cx.simplices.push_back({i, k + i});
        for (int i = 0; i + 1 < k; ++i) {
            cx.simplices.push_back({i, i + 1});
            cx.simplices.push_back({k + i, k + i + 1});
        }
        for (SimplexIndices& s : cx.simplices) std::sort(s.begin(), s.end());
    };

    std::vector<int> order_a(static_cast<std::size_t>(k)), order_b(static_cast<std::size_t>(k));
    std::iota(order_a.begin(), order_a.end(), 0);
    std::iota(order_b.begin(), order_b.end(), 0);
    assemble(order_a, order_b, result.bridges, result.complex);
    result.validation = validate_complex(result.complex, 1e-9);

    // The rank-by-projection ladder can self-intersect when a side's anchors
    // spread mostly along the axis (thin bands, bent strings).  Search the
    // side walks for a planar drawing; the enumeration order is fixed, so the
    // result stays deterministic.
    if (!result.validation.valid && k > 1 && k <= 4) {
        std::vector<Bridge> bridges;
        SimplicialComplex cx;
        bool found = false;
        std::vector<int> oa = order_a;
        do {
            std::vector<int> ob = order_b;
            do {
                assemble(oa, ob, bridges, cx);
                ComplexValidation v = validate_complex(cx, 1e-9);
                if (v.valid) {
                    result.bridges = std::move(bridges);
                    result.complex = std::move(cx);
                    result.validation = std::move(v);
                    found = true;
                }
            } while (!found && std::next_permutation(ob.begin(), ob.end()));
        } while (!found && std::next_permutation(oa.begin(), oa.end()));
    }

    // Every bridge endpoint must be strongly near its anchor region: the
    // vertex disk sits strictly inside at depth >= 2 * radius by construction.
    for (const Bridge& br : result.bridges) {
        if (a.boundary_distance(br.a_anchor_point) < result.vertex_radius ||
            b.boundary_distance(br.b_anchor_point) < result.vertex_radius)
            raise(ErrorKind::internal, "sew: bridge endpoint not strongly near its region");
    }

    // Rectangle detection for the two-bridge cycle a0-b0-b1-a1.
    if (k == 2) {
        const std::array<Point2, 4> cyc{result.bridges[0].a_anchor_point,
                                        result.bridges[0].b_anchor_point,
                                        result.bridges[1].b_anchor_point,
                                        result.bridges[1].a_anchor_point};
        bool rect = true;
        for (int i = 0; i < 4; ++i) {
            const Point2 u = cyc[(i + 1) % 4] - cyc[i];
            const Point2 v = cyc[(i + 2) % 4] - cyc[(i + 1) % 4];
            const double lu = norm(u), lv = norm(v);
            if (lu <= 0.0 || lv <= 0.0) { rect = false; break; }
            const double angle = std::acos(std::clamp(dot(u, v) / (lu * lv), -1.0, 1.0));
            if (std::abs(angle - M_PI / 2.0) > 1e-6) { rect = false; break; }
        }
        if (rect) {
            const double s01 = dist(cyc[0], cyc[1]), s23 = dist(cyc[2], cyc[3]);
            const double s12 = dist(cyc[1], cyc[2]), s30 = dist(cyc[3], cyc[0]);
            rect = std::abs(s01 - s23) <= 1e-9 && std::abs(s12 - s30) <= 1e-9;
        }
        result.rectangular = rect;
    }
    return result;
}

Scene SewResult::augmented_scene(const Scene& base) const {
    std::vector<Region> regions = base.regions();
    int n = 0;
    for (const Bridge& br : bridges) {
        const std::string tag = a_id + "~" + b_id + "#" + std::to_string(n++);
        regions.emplace_back(tag + ".a", disk_ring(br.a_anchor_point, vertex_radius));
        regions.emplace_back(tag + ".b", disk_ring(br.b_anchor_point, vertex_radius));
        regions.emplace_back(tag + ".edge",
                             capsule_ring(br.a_anchor_point, br.b_anchor_point, vertex_radius));
    }
    return Scene(base.box(), base.epsilon(), base.cell_size(), base.registry(), std::move(regions),
                 base.strings(), base.grids());
}

std::optional<std::vector<std::string>> path_connected(const Region& a, const Region& b,
                                                       const Scene& scene) {
    const std::size_t n = scene.region_count();
    std::size_t start = n, goal = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (scene.region_at(i).id() == a.id()) start = i;
        if (scene.region_at(i).id() == b.id()) goal = i;
    }
    if (start == n || goal == n)
        raise(ErrorKind::lookup, "path_connected: regions must belong to the scene");

    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (cur == goal) break;
        for (std::size_t next = 0; next < n; ++next) {
            if (seen[next]) continue;
            if (strongly_near(scene.region_at(cur), scene.region_at(next), scene).holds) {
                seen[next] = true;
                parent[next] = static_cast<int>(cur);
                queue.push_back(next);
            }
        }
    }
    if (!seen[goal]) return std::nullopt;
    std::vector<std::string> chain;
    for (int v = static_cast<int>(goal); v != -1; v = parent[static_cast<std::size_t>(v)])
        chain.push_back(scene.region_at(static_cast<std::size_t>(v)).id());
    std::reverse(chain.begin(), chain.end());
    // The chain must verify consecutive strong nearness before returning.
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!strongly_near(scene.find_region(chain[i]), scene.find_region(chain[i + 1]), scene).holds)
            raise(ErrorKind::internal, "path_connected: chain failed verification");
    return chain;
}

} // namespace proxregio
