#include "proxregio/axioms.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "proxregio/description.hpp"
#include "proxregio/errors.hpp"
#include "proxregio/format.hpp"
#include "proxregio/parallelism.hpp"
#include "proxregio/proximity.hpp"
#include "proxregio/random_scene.hpp"
#include "proxregio/scene.hpp"
#include "proxregio/simplicial.hpp"
#include "proxregio/strings.hpp"

namespace proxregio {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct AxiomSpec {
    const char* id;
    const char* statement;
};

constexpr AxiomSpec kSchema[] = {
    {"P0", "the empty set is near nothing"},
    {"P1", "nearness is symmetric"},
    {"P2", "sets with a common part are near"},
    {"P3", "near a finite union exactly when near some part"},
    {"P4", "nearness propagates through pointwise-near covers"},
    {"P5", "near point regions coincide"},
    {"snN0", "nothing is strongly near the empty set; the universe is strongly near everything"},
    {"snN1", "strong nearness is symmetric"},
    {"snN2", "strongly near sets share points"},
    {"snN3", "strong nearness extends to finite unions"},
    {"snN4", "overlapping interiors force strong nearness"},
    {"snN5", "a point region inside the interior is strongly near the region"},
    {"snN6", "strongly near point regions coincide"},
    {"dP0", "the empty set is descriptively near nothing"},
    {"dP1", "descriptive nearness is symmetric"},
    {"dP2", "a nonempty descriptive intersection forces descriptive nearness"},
    {"dP3", "descriptively near a finite union exactly when near some part"},
    {"dP4", "descriptive nearness propagates through pointwise-near covers"},
    {"dP5", "descriptively near point regions have matching descriptions"},
    {"dsnP0", "nothing is descriptively strongly near the empty set; the universe is descriptively "
              "strongly near everything"},
    {"dsnP1", "descriptive strong nearness is symmetric"},
    {"dsnP2", "descriptively strongly near sets have a nonempty descriptive intersection"},
    {"dsnP4", "descriptively overlapping interiors force descriptive strong nearness"},
    {"dsnP5", "a point region described inside an interior is descriptively strongly near the "
              "region"},
    {"dsnP6", "descriptively strongly near point regions have matching descriptions"},
    {"PG.1", "a line between regions is straight exactly when its slope is constant"},
    {"PG.2", "every region has non-zero area"},
    {"PG.3", "every region is finite"},
    {"PG.4", "the interior of a region lies inside its closure"},
    {"PG.5", "empty interior exactly when no subregions"},
    {"PG.6", "a region is closed exactly when it equals its closure"},
    {"PG.7", "a circle is a closed polygon with boundary equidistant from the center"},
    {"PG.8", "regions with equal areas are congruent"},
    {"PG.9", "a surface cuts a surface in a line"},
    {"PG.10", "a line cuts a line in a region"},
    {"PG.11", "offset lines with a non-cutting segment are locally parallel"},
    {"PG.12", "indefinitely extended, strongly far lines are parallel"},
    {"d.1", "adjacent subregions on a line path are descriptively strongly near"},
    {"d.2", "every region has a description"},
    {"d.3", "a polytope is described by the sequence of its member descriptions"},
    {"d.4", "a closed region and its closure share one description"},
    {"d.5", "regions with matching feature vectors are descriptively congruent"},
    {"d.6", "shape descriptions match exactly when perimeters are equal"},
    {"d.7", "shape descriptions match exactly when interior areas are equal"},
    {"d.8", "descriptively parallel means strongly far extensions plus descriptive nearness"},
};

ProbeRegistry color_registry() {
    ProbeRegistry reg;
    reg.tolerance = 1e-6;
    reg.probes = {{"red", ProbeKind::color_r},
                  {"green", ProbeKind::color_g},
                  {"blue", ProbeKind::color_b}};
    return reg;
}

std::string group_str(const RegionGroup& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += g[i];
    }
    return s + "}";
}

std::string point_str(Point2 p) { return "(" + fmt_g(p.x) + "," + fmt_g(p.y) + ")"; }

bool cross_match(const std::vector<FeatureVector>& a, const std::vector<FeatureVector>& b,
                 double tol) {
    for (const FeatureVector& u : a)
        for (const FeatureVector& v : b)
            if (features_match(u, v, tol)) return true;
    return false;
}

// Strict segment crossing (shared endpoints and tangencies do not count).
bool proper_cross(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
    const double d1 = cross(b2 - b1, a1 - b1);
    const double d2 = cross(b2 - b1, a2 - b1);
    const double d3 = cross(a2 - a1, b1 - a1);
    const double d4 = cross(a2 - a1, b2 - a1);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

int proper_crossings(const Ring& a, const Ring& b) {
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point2 p1 = a[i], p2 = a[(i + 1) % a.size()];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (proper_cross(p1, p2, b[j], b[(j + 1) % b.size()])) ++count;
    }
    return count;
}

bool all_vertices_inside(const Region& inner, const Region& outer) {
    for (const Point2& p : inner.outer())
        if (!outer.contains(p, 1e-9)) return false;
    return true;
}

// All boundary vertices equidistant from their mean center, relatively.
bool circle_like(const Ring& ring, double rel_tol) {
    Point2 c{0.0, 0.0};
    for (const Point2& p : ring) c = c + p;
    c = c * (1.0 / static_cast<double>(ring.size()));
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const Point2& p : ring) {
        const double r = dist(p, c);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return hi - lo <= rel_tol * std::max(1e-300, hi);
}

// Slope-based straightness, deliberately a different computation from the
// cross-product route used by PhysicalString::straight.
bool constant_slope(const std::vector<Point2>& pts) {
    std::optional<double> slope;
    bool vertical = false, first = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double dx = pts[i + 1].x - pts[i].x;
        const double dy = pts[i + 1].y - pts[i].y;
        const bool v = std::abs(dx) <= 1e-12 * std::abs(dy);
        const std::optional<double> s = v ? std::nullopt : std::optional<double>(dy / dx);
        if (first) {
            slope = s;
            vertical = v;
            first = false;
            continue;
        }
        if (v != vertical) return false;
        if (!v && std::abs(*s - *slope) > 1e-6 * std::max({1.0, std::abs(*s), std::abs(*slope)}))
            return false;
    }
    return true;
}

Ring tiny_square(Point2 center, double half) {
    return {{center.x - half, center.y - half},
            {center.x + half, center.y - half},
            {center.x + half, center.y + half},
            {center.x - half, center.y + half}};
}

Point2 ring_mean(const Ring& r) {
    Point2 c{0.0, 0.0};
    for (const Point2& p : r) c = c + p;
    return c * (1.0 / static_cast<double>(r.size()));
}

struct PointEntry {
    std::string id;
    Point2 center;
    int palette = 0;
};

class Harness {
public:
    Harness(std::uint64_t seed, int trials) : rng_(seed) {
        report_.seed = seed;
        report_.requested_trials = trials;
        trials_ = std::max(1, trials);
        std::set<std::string> seen;
        for (const AxiomSpec& s : kSchema) {
            if (!seen.insert(s.id).second)
                raise(ErrorKind::internal, "axiom schema: duplicate id " + std::string(s.id));
            AxiomResult r;
            r.id = s.id;
            r.statement = s.statement;
            index_[s.id] = report_.results.size();
            report_.results.push_back(std::move(r));
        }
    }

    AxiomReport run();

private:
    std::mt19937_64 rng_;
    int trials_ = 0;
    int t_ = 0;  // current trial index
    std::uint64_t scene_seed_ = 0;
    AxiomReport report_;
    std::unordered_map<std::string, std::size_t> index_;

    // auxiliary material, built once per run
    std::optional<Scene> point_scene_;
    std::vector<PointEntry> points_;
    std::optional<SampledScene> universe_;
    std::vector<std::string> universe_ids_;
    std::optional<Scene> dsn_scene_;
    std::vector<std::pair<std::string, std::string>> dsn_matched_;  // (point id, region id)
    std::string dsn_gray_;
    std::vector<std::string> dsn_region_ids_;
    std::optional<Scene> parallel_scene_;
    std::vector<std::string> par_a_, par_b_;
    std::string par_crosser_, par_offcolor_;
    const Point2 par_dir_{1.0, 0.0};

    void require(const char* id, bool ok, const std::string& counterexample) {
        auto it = index_.find(id);
        if (it == index_.end())
            raise(ErrorKind::internal, "axiom check outside the schema: " + std::string(id));
        AxiomResult& r = report_.results[it->second];
        ++r.trials;
        if (!ok) {
            ++r.failures;
            if (r.first_counterexample.empty()) r.first_counterexample = counterexample;
        }
    }

    std::string ctx() const { return "seed=" + std::to_string(scene_seed_); }

    const std::string& pick(const std::vector<std::string>& ids) {
        return ids[static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<int>(ids.size()) - 1))];
    }

    RegionGroup random_group(const std::vector<std::string>& ids, int max_size) {
        const int n = uniform_int(rng_, 1, max_size);
        RegionGroup g;
        for (int i = 0; i < n; ++i) g.push_back(pick(ids));
        return g;
    }

    std::pair<std::string, std::string> pick_pair(const SampledScene& s) {
        const std::vector<std::pair<std::string, std::string>>* lists[4] = {
            &s.overlapping, &s.touching, &s.narrow_gap, &s.well_separated};
        const auto& list = *lists[uniform_int(rng_, 0, 3)];
        return list[static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<int>(list.size()) - 1))];
    }

    void build_materials();
    void lodato_trials(const SampledScene& s, const std::vector<std::string>& ids);
    void strong_trials(const SampledScene& s, const std::vector<std::string>& ids);
    void descriptive_trials(const SampledScene& s, const std::vector<std::string>& ids);
    void point_trials();
    void universe_trials();
    void dsn_point_trials();
    void pg_trials(const SampledScene& s, const std::vector<std::string>& ids);
    void d_trials(const SampledScene& s, const std::vector<std::string>& ids);
};

void Harness::build_materials() {
    // Point scene: one sub-cell square per chosen cell, colored from a small
    // palette so distinct points with matching descriptions exist.
    {
        const Box box{{0.0, 0.0}, {10.0, 10.0}};
        const double h = 0.25;
        const double half = h / 16.0;
        const std::array<std::array<double, 3>, 3> palette{
            {{0.9, 0.1, 0.1}, {0.1, 0.8, 0.2}, {0.15, 0.3, 0.85}}};
        std::vector<Region> regions;
        for (int k = 0; k < 24; ++k) {
            const int i = 2 + (k % 6) * 6;
            const int j = 2 + (k / 6) * 6;
            const Point2 c{box.lo.x + (i + 0.5) * h, box.lo.y + (j + 0.5) * h};
            const auto& col = palette[static_cast<std::size_t>(k % 3)];
            PointEntry e{"p" + std::to_string(k), c, k % 3};
            regions.emplace_back(e.id, tiny_square(c, half), std::vector<Ring>{}, false,
                                 FeatureMap{{"red", col[0]}, {"green", col[1]}, {"blue", col[2]}});
            points_.push_back(std::move(e));
        }
        point_scene_.emplace(box, 1e-9, h, color_registry(), std::move(regions));
    }

    // Universe scene: a sampled scene plus the box-covering region "X".
    {
        GeneratorOptions opt;
        opt.region_count = 8;
        opt.seed = rng_();
        opt.include_universe = true;
        universe_ = sample_scene(opt);
        for (std::size_t i = 0; i < universe_->scene.region_count(); ++i)
            universe_ids_.push_back(universe_->scene.region_at(i).id());
    }

    // Descriptive point scene: a sampled scene plus sub-cell squares whose
    // feature stores copy specific regions' colors, placed in the empty strip
    // along the left box edge, plus one square with an unused color.
    {
        GeneratorOptions opt;
        opt.region_count = 8;
        opt.seed = rng_();
        const SampledScene base = sample_scene(opt);
        std::vector<Region> regions;
        for (std::size_t i = 0; i < base.scene.region_count(); ++i) {
            regions.push_back(base.scene.region_at(i));
            dsn_region_ids_.push_back(regions.back().id());
        }
        const double h = base.scene.cell_size();
        const double half = h / 16.0;
        std::set<std::string> used_colors;
        int placed = 0;
        for (const std::string& id : dsn_region_ids_) {
            const Region& r = base.scene.find_region(id);
            std::string key;
            for (const auto& [k, v] : r.features()) key += k + "=" + fmt_g(v) + ";";
            if (!used_colors.insert(key).second) continue;
            const Point2 c{base.scene.box().lo.x + 0.5 * h,
                           base.scene.box().lo.y + (4.0 + 8.0 * placed + 0.5) * h};
            const std::string pid = "q" + std::to_string(placed);
            regions.emplace_back(pid, tiny_square(c, half), std::vector<Ring>{}, false,
                                 r.features());
            dsn_matched_.push_back({pid, id});
            ++placed;
            if (placed == 4) break;
        }
        const Point2 gray_c{base.scene.box().lo.x + 0.5 * h, base.scene.box().lo.y + 36.5 * h};
        dsn_gray_ = "qgray";
        regions.emplace_back(dsn_gray_, tiny_square(gray_c, half), std::vector<Ring>{}, false,
                             FeatureMap{{"red", 0.5}, {"green", 0.5}, {"blue", 0.5}});
        dsn_scene_.emplace(base.scene.box(), base.scene.epsilon(), base.scene.cell_size(),
                           color_registry(), std::move(regions));
    }

    // Parallel scene: two horizontal rows of same-colored squares (a genuinely
    // parallel configuration under direction (1,0)), one square sharing the
    // lower row's band (sweeps collide), and one parallel but differently
    // colored square.
    {
        std::vector<Region> regions;
        auto square = [&](const std::string& id, Point2 c, FeatureMap f) {
            regions.emplace_back(id, tiny_square(c, 0.4), std::vector<Ring>{}, false, std::move(f));
        };
        const FeatureMap red{{"red", 0.9}, {"green", 0.1}, {"blue", 0.1}};
        const FeatureMap green{{"red", 0.1}, {"green", 0.8}, {"blue", 0.2}};
        const FeatureMap gray{{"red", 0.2}, {"green", 0.2}, {"blue", 0.2}};
        for (int i = 0; i < 3; ++i) {
            const double x = 2.0 + 3.0 * i;
            square("a" + std::to_string(i), {x, 2.0}, red);
            square("b" + std::to_string(i), {x, 7.0}, red);
            par_a_.push_back("a" + std::to_string(i));
            par_b_.push_back("b" + std::to_string(i));
        }
        par_crosser_ = "crosser";
        square(par_crosser_, {3.5, 2.0}, green);
        par_offcolor_ = "offcolor";
        square(par_offcolor_, {5.0, 9.0}, gray);
        parallel_scene_.emplace(Box{{0.0, 0.0}, {10.0, 10.0}}, 1e-9, 0.25, color_registry(),
                                std::move(regions));
    }
}

void Harness::lodato_trials(const SampledScene& s, const std::vector<std::string>& ids) {
    const Scene& sc = s.scene;
    const ProbeRegistry& reg = sc.registry();

    RegionGroup A = random_group(ids, 2);
    RegionGroup B = random_group(ids, 2);
    RegionGroup C = random_group(ids, 2);

    // empty-set clauses
    require("P0", !near({}, A, sc).holds, ctx() + " A=" + group_str(A));
    require("dP0", !descriptively_near({}, A, sc, reg).holds, ctx() + " A=" + group_str(A));

    // symmetry, biased to the constructed pair classes half the time
    RegionGroup SA = A, SB = B;
    if (t_ % 2 == 0) {
        const auto pr = pick_pair(s);
        SA = {pr.first};
        SB = {pr.second};
    }
    require("P1", near(SA, SB, sc).holds == near(SB, SA, sc).holds,
            ctx() + " A=" + group_str(SA) + " B=" + group_str(SB));
    require("dP1",
            descriptively_near(SA, SB, sc, reg).holds == descriptively_near(SB, SA, sc, reg).holds,
            ctx() + " A=" + group_str(SA) + " B=" + group_str(SB));

    // common part implies near: alternate a shared member with a constructed
    // overlapping pair
    if (t_ % 2 == 0) {
        RegionGroup X = random_group(ids, 2), Y = random_group(ids, 2);
        const std::string& shared = pick(ids);
        X.push_back(shared);
        Y.push_back(shared);
        require("P2", near(X, Y, sc).holds, ctx() + " A=" + group_str(X) + " B=" + group_str(Y));
    } else {
        const auto& pr = s.overlapping[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(s.overlapping.size()) - 1))];
        require("P2", near({pr.first}, {pr.second}, sc).holds,
                ctx() + " A={" + pr.first + "} B={" + pr.second + "}");
    }

    // finite-union equivalence
    {
        RegionGroup BC = B;
        BC.insert(BC.end(), C.begin(), C.end());
        const bool lhs = near(A, BC, sc).holds;
        const bool rhs = near(A, B, sc).holds || near(A, C, sc).holds;
        require("P3", lhs == rhs,
                ctx() + " A=" + group_str(A) + " B=" + group_str(B) + " C=" + group_str(C));
        const bool dlhs = descriptively_near(A, BC, sc, reg).holds;
        const bool drhs = descriptively_near(A, B, sc, reg).holds ||
                          descriptively_near(A, C, sc, reg).holds;
        require("dP3", dlhs == drhs,
                ctx() + " A=" + group_str(A) + " B=" + group_str(B) + " C=" + group_str(C));
    }

    // cover transitivity on a constructible hypothesis: C4 contains B4, so
    // every {b} is near C4; the antecedent A-near-B is biased to hold
    {
        RegionGroup B4 = random_group(ids, 2);
        RegionGroup A4 = (t_ % 2 == 0) ? RegionGroup{B4.front()} : random_group(ids, 2);
        RegionGroup C4 = B4;
        C4.push_back(pick(ids));
        bool hyp = near(A4, B4, sc).holds;
        for (const std::string& b : B4) hyp = hyp && near(RegionGroup{b}, C4, sc).holds;
        require("P4", !hyp || near(A4, C4, sc).holds,
                ctx() + " A=" + group_str(A4) + " B=" + group_str(B4) + " C=" + group_str(C4));

        bool dhyp = descriptively_near(A4, B4, sc, reg).holds;
        for (const std::string& b : B4)
            dhyp = dhyp && descriptively_near(RegionGroup{b}, C4, sc, reg).holds;
        require("dP4", !dhyp || descriptively_near(A4, C4, sc, reg).holds,
                ctx() + " A=" + group_str(A4) + " B=" + group_str(B4) + " C=" + group_str(C4));
    }

    // nonempty descriptive intersection implies descriptive nearness, with the
    // hypothesis recomputed from raw description sets
    {
        RegionGroup X = (t_ % 2 == 0) ? random_group(ids, 2) : RegionGroup{},
                    Y = (t_ % 2 == 0) ? random_group(ids, 2) : RegionGroup{};
        if (t_ % 2 != 0) {
            const auto& list = (t_ % 4 == 1) ? s.overlapping : s.well_separated;
            const auto& pr = list[static_cast<std::size_t>(
                uniform_int(rng_, 0, static_cast<int>(list.size()) - 1))];
            X = {pr.first};
            Y = {pr.second};
        }
        const bool hyp = cross_match(description_set(X, sc, reg), description_set(Y, sc, reg),
                                     reg.tolerance);
        require("dP2", !hyp || descriptively_near(X, Y, sc, reg).holds,
                ctx() + " A=" + group_str(X) + " B=" + group_str(Y));
    }
}

void Harness::strong_trials(const SampledScene& s, const std::vector<std::string>& ids) {
    const Scene& sc = s.scene;
    const ProbeRegistry& reg = sc.registry();

    RegionGroup A = random_group(ids, 2);
    require("snN0", !strongly_near({}, A, sc).holds, ctx() + " A=" + group_str(A));
    require("dsnP0", !descriptively_strongly_near({}, A, sc, reg).holds,
            ctx() + " A=" + group_str(A));

    // symmetry on biased pairs
    {
        RegionGroup SA, SB;
        if (t_ % 2 == 0) {
            const auto pr = pick_pair(s);
            SA = {pr.first};
            SB = {pr.second};
        } else {
            SA = random_group(ids, 2);
            SB = random_group(ids, 2);
        }
        require("snN1", strongly_near(SA, SB, sc).holds == strongly_near(SB, SA, sc).holds,
                ctx() + " A=" + group_str(SA) + " B=" + group_str(SB));
        require("dsnP1",
                descriptively_strongly_near(SA, SB, sc, reg).holds ==
                    descriptively_strongly_near(SB, SA, sc, reg).holds,
                ctx() + " A=" + group_str(SA) + " B=" + group_str(SB));
    }

    // strongly near sets share points: the verdict must carry a witness lying
    // in both groups
    {
        const auto pr = (t_ % 2 == 0) ? s.overlapping[static_cast<std::size_t>(uniform_int(
                                            rng_, 0, static_cast<int>(s.overlapping.size()) - 1))]
                                      : pick_pair(s);
        const auto v = strongly_near(RegionGroup{pr.first}, RegionGroup{pr.second}, sc);
        bool ok = true;
        std::string detail;
        if (v.holds) {
            std::optional<Point2> w = v.shared_point;
            if (!w && v.shared_segment)
                w = (v.shared_segment->first + v.shared_segment->second) * 0.5;
            if (!w) {
                ok = false;
                detail = " no witness";
            } else {
                ok = sc.find_region(pr.first).contains(*w, 1e-9) &&
                     sc.find_region(pr.second).contains(*w, 1e-9);
                detail = " witness=" + point_str(*w);
            }
        }
        require("snN2", ok, ctx() + " A={" + pr.first + "} B={" + pr.second + "}" + detail);
    }

    // union extension from one strongly near part
    {
        const auto& pr = s.overlapping[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(s.overlapping.size()) - 1))];
        const RegionGroup GA{pr.first};
        const RegionGroup B1{pr.second};
        RegionGroup U = B1;
        const RegionGroup extra = random_group(ids, 2);
        U.insert(U.end(), extra.begin(), extra.end());
        const bool hyp = strongly_near(GA, B1, sc).holds;
        require("snN3", !hyp || strongly_near(GA, U, sc).holds,
                ctx() + " A=" + group_str(GA) + " B*=" + group_str(B1) + " U=" + group_str(U));
    }

    // interior overlap forces strong nearness
    {
        const auto& pr = s.overlapping[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(s.overlapping.size()) - 1))];
        const Region& ra = sc.find_region(pr.first);
        const Region& rb = sc.find_region(pr.second);
        const auto p = interior_overlap_point(ra, rb);
        require("snN4", !p || strongly_near(RegionGroup{pr.first}, RegionGroup{pr.second}, sc).holds,
                ctx() + " A={" + pr.first + "} B={" + pr.second + "}");
    }

    // a point region seated in an interior cell is strongly near its region
    {
        const Region& r = sc.find_region(pick(ids));
        const RegionGrid& grid = sc.grid_of(r.id());
        std::vector<const SubregionCell*> interior;
        for (const SubregionCell& c : grid.cells)
            if (c.interior_cell) interior.push_back(&c);
        if (interior.empty()) {
            require("snN5", true, "");
        } else {
            const SubregionCell& c = *interior[static_cast<std::size_t>(
                uniform_int(rng_, 0, static_cast<int>(interior.size()) - 1))];
            const Point2 center = ring_mean(sc.cell_rect(c.index));
            const Region probe("pointprobe", tiny_square(center, sc.cell_size() / 16.0));
            require("snN5", strongly_near(probe, r, sc).holds,
                    ctx() + " A=" + r.id() + " x=" + point_str(center));
        }
    }

    // descriptive strong nearness implies a nonempty descriptive intersection
    {
        const auto& list = (t_ % 2 == 0) ? s.overlapping : s.well_separated;
        const auto& pr = list[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(list.size()) - 1))];
        const RegionGroup GA{pr.first}, GB{pr.second};
        const auto v = descriptively_strongly_near(GA, GB, sc, reg);
        require("dsnP2", !v.holds || !descriptive_intersection(GA, GB, sc, reg).empty(),
                ctx() + " A=" + group_str(GA) + " B=" + group_str(GB));

        // matching interior descriptions force descriptive strong nearness
        const bool hyp = cross_match(interior_description_set(GA, sc, reg),
                                     interior_description_set(GB, sc, reg), reg.tolerance);
        require("dsnP4", !hyp || descriptively_strongly_near(GA, GB, sc, reg).holds,
                ctx() + " A=" + group_str(GA) + " B=" + group_str(GB));
    }
}

void Harness::descriptive_trials(const SampledScene& s, const std::vector<std::string>& ids) {
    const Scene& sc = s.scene;
    const ProbeRegistry& reg = sc.registry();

    // every region has a full-width description carried by its cells
    {
        const std::string& id = pick(ids);
        const Region& r = sc.find_region(id);
        const FeatureVector v = describe(r, reg);
        const auto set = description_set({id}, sc, reg);
        require("d.2", v.values.size() == reg.size() && !set.empty(), ctx() + " A=" + id);
    }

    // closure shares the description
    {
        const Region& r = sc.find_region(pick(ids));
        const Region closure("closure", r.outer(), r.holes(), r.is_hole_region(), r.features());
        const FeatureVector a = describe(r, reg);
        const FeatureVector b = describe(closure, reg);
        require("d.4", a == b && features_match(a, b, reg.tolerance), ctx() + " A=" + r.id());
    }

    // descriptive congruence is exactly feature-vector matching
    {
        const Region& x = sc.find_region(pick(ids));
        const Region& y = sc.find_region(pick(ids));
        const bool api = descriptively_congruent(x, y, reg);
        const bool direct = features_match(describe(x, reg), describe(y, reg), reg.tolerance);
        const Region moved = x.translated({0.31, -0.17}, "d5moved");
        const Region recolored("d5recolored", x.outer(), x.holes(), false,
                               FeatureMap{{"red", 0.49}, {"green", 0.51}, {"blue", 0.5}});
        require("d.5",
                api == direct && descriptively_congruent(x, moved, reg) &&
                    !descriptively_congruent(x, recolored, reg),
                ctx() + " A=" + x.id() + " B=" + y.id());
    }

    // one-trait shape nearness: perimeter and interior area
    {
        const Region& r = sc.find_region(pick(ids));
        const Region moved = r.translated({0.41, 0.23}, "shifted");
        Ring scaled_ring = r.outer();
        const Point2 c = r.measures().centroid;
        for (Point2& p : scaled_ring) p = c + (p - c) * 1.3;
        const Region scaled("scaled", scaled_ring);

        ProbeRegistry perim_reg;
        perim_reg.tolerance = 1e-6;
        perim_reg.probes = {{"perimeter", ProbeKind::perimeter}};
        const bool match_mt = features_match(describe(r, perim_reg), describe(moved, perim_reg),
                                             perim_reg.tolerance);
        const bool match_ms = features_match(describe(r, perim_reg), describe(scaled, perim_reg),
                                             perim_reg.tolerance);
        require("d.6",
                match_mt == equal_perimeters(r, moved, perim_reg.tolerance) && match_mt &&
                    match_ms == equal_perimeters(r, scaled, perim_reg.tolerance) && !match_ms,
                ctx() + " A=" + r.id());

        ProbeRegistry area_reg;
        area_reg.tolerance = 1e-6;
        area_reg.probes = {{"area", ProbeKind::area}};
        const bool amatch_mt = features_match(describe(r, area_reg), describe(moved, area_reg),
                                              area_reg.tolerance);
        const bool amatch_ms = features_match(describe(r, area_reg), describe(scaled, area_reg),
                                              area_reg.tolerance);
        require("d.7",
                amatch_mt == equal_interior_areas(r, moved, area_reg.tolerance) && amatch_mt &&
                    amatch_ms == equal_interior_areas(r, scaled, area_reg.tolerance) && !amatch_ms,
                ctx() + " A=" + r.id());
    }

    // a polytope's description is the ordered list of member descriptions
    {
        const Point2 v0{1.0 + uniform_range(rng_, 0.0, 2.0), 1.0 + uniform_range(rng_, 0.0, 2.0)};
        const Point2 v1 = v0 + Point2{2.0 + uniform_range(rng_, 0.0, 1.0), 0.3};
        const Point2 v2 = v0 + Point2{1.0, 2.0 + uniform_range(rng_, 0.0, 1.0)};
        const double r0 = uniform_range(rng_, 0.2, 0.4);
        const double r1 = uniform_range(rng_, 0.2, 0.4);
        const double r2 = uniform_range(rng_, 0.2, 0.4);
        SimplicialComplex cx;
        cx.vertices = {{v0, r0}, {v1, r1}, {v2, r2}};
        cx.simplices = {{0}, {1}, {2}};
        ProbeRegistry geo;
        geo.tolerance = 1e-9;
        geo.probes = {{"area", ProbeKind::area},
                      {"perimeter", ProbeKind::perimeter},
                      {"diameter", ProbeKind::diameter}};
        const auto listed = complex_description(cx, sc, geo);
        bool ok = listed.size() == cx.vertices.size();
        for (std::size_t i = 0; ok && i < cx.vertices.size(); ++i) {
            const Region disk("vertex#" + std::to_string(i),
                              disk_ring(cx.vertices[i].center, cx.vertices[i].radius));
            ok = listed[i] == describe(disk, geo);
        }
        require("d.3", ok, ctx() + " vertices=" + std::to_string(cx.vertices.size()));
    }
}

void Harness::point_trials() {
    const Scene& sc = *point_scene_;
    const ProbeRegistry& reg = sc.registry();
    const PointEntry& x = points_[static_cast<std::size_t>(
        uniform_int(rng_, 0, static_cast<int>(points_.size()) - 1))];
    const PointEntry* y = &x;
    const int mode = t_ % 3;
    if (mode != 0) {
        std::vector<const PointEntry*> pool;
        for (const PointEntry& e : points_) {
            if (e.id == x.id) continue;
            if (mode == 1 && e.palette == x.palette) pool.push_back(&e);
            if (mode == 2 && e.palette != x.palette) pool.push_back(&e);
        }
        y = pool[static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<int>(pool.size()) - 1))];
    }
    const bool same = x.id == y->id;
    const std::string cx = "x=" + x.id + " y=" + y->id;

    require("P5", !near(RegionGroup{x.id}, RegionGroup{y->id}, sc).holds || same, cx);
    require("snN6", strongly_near(RegionGroup{x.id}, RegionGroup{y->id}, sc).holds == same, cx);

    const bool match = features_match(describe(sc.find_region(x.id), reg),
                                      describe(sc.find_region(y->id), reg), reg.tolerance);
    require("dP5",
            !descriptively_near(RegionGroup{x.id}, RegionGroup{y->id}, sc, reg).holds || match, cx);
    require("dsnP6",
            descriptively_strongly_near(RegionGroup{x.id}, RegionGroup{y->id}, sc, reg).holds ==
                match,
            cx);
}

void Harness::universe_trials() {
    const Scene& sc = universe_->scene;
    const ProbeRegistry& reg = sc.registry();
    const RegionGroup A = random_group(universe_ids_, 2);
    require("snN0", strongly_near(RegionGroup{"X"}, A, sc).holds, "universe A=" + group_str(A));
    require("dsnP0", descriptively_strongly_near(RegionGroup{"X"}, A, sc, reg).holds,
            "universe A=" + group_str(A));
}

void Harness::dsn_point_trials() {
    const Scene& sc = *dsn_scene_;
    const ProbeRegistry& reg = sc.registry();
    if (t_ % 2 == 0 && !dsn_matched_.empty()) {
        const auto& [pid, rid] = dsn_matched_[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(dsn_matched_.size()) - 1))];
        const Region& p = sc.find_region(pid);
        const Region& a = sc.find_region(rid);
        const bool hyp = cross_match({describe(p, reg)}, interior_description_set({rid}, sc, reg),
                                     reg.tolerance);
        require("dsnP5", !hyp || dsnear(p, a, sc, reg).holds,
                "x=" + pid + " A=" + rid);
    } else {
        // unused color: the hypothesis must fail, leaving the axiom vacuous
        const std::string& rid = pick(dsn_region_ids_);
        const Region& p = sc.find_region(dsn_gray_);
        const bool hyp = cross_match({describe(p, reg)}, interior_description_set({rid}, sc, reg),
                                     reg.tolerance);
        require("dsnP5", !hyp, "x=" + dsn_gray_ + " A=" + rid);
    }
}

void Harness::pg_trials(const SampledScene& s, const std::vector<std::string>& ids) {
    const Scene& sc = s.scene;

    // non-zero area and finiteness over every region of the scene
    {
        bool areas = true, finite = true;
        std::string worst;
        for (std::size_t i = 0; i < sc.region_count(); ++i) {
            const Region& r = sc.region_at(i);
            if (!(r.measures().area > 0.0)) {
                areas = false;
                worst = r.id();
            }
            const Box& bb = r.bbox();
            const bool in_box = std::isfinite(bb.lo.x) && std::isfinite(bb.lo.y) &&
                                std::isfinite(bb.hi.x) && std::isfinite(bb.hi.y) &&
                                bb.lo.x >= sc.box().lo.x - 1e-9 && bb.lo.y >= sc.box().lo.y - 1e-9 &&
                                bb.hi.x <= sc.box().hi.x + 1e-9 && bb.hi.y <= sc.box().hi.y + 1e-9;
            if (!in_box) {
                finite = false;
                worst = r.id();
            }
        }
        require("PG.2", areas, ctx() + " A=" + worst);
        require("PG.3", finite, ctx() + " A=" + worst);
    }

    // straight lines between regions have constant slope; bent ones do not
    {
        const std::string& ida = pick(ids);
        std::string idb = pick(ids);
        for (int guard = 0; idb == ida && guard < 8; ++guard) idb = pick(ids);
        Point2 c1 = sc.find_region(ida).measures().centroid;
        Point2 c2 = sc.find_region(idb).measures().centroid;
        if (dist(c1, c2) < 0.2) {
            c1 = {2.0, 2.0};
            c2 = {8.0, 7.0};
        }
        const PhysicalString line = make_string("pg1line", {c1, c2}, 0.05, sc);
        Point2 u = c2 - c1;
        u = u * (1.0 / norm(u));
        const Point2 mid = (c1 + c2) * 0.5 + perp(u) * 0.3;
        const PhysicalString bent = make_string("pg1bent", {c1, mid, c2}, 0.05, sc);
        const bool straight_ok = line.straight() && constant_slope(line.spine);
        const bool bent_ok = !bent.straight() && !constant_slope(bent.spine);
        require("PG.1", straight_ok && bent_ok,
                ctx() + " from=" + point_str(c1) + " to=" + point_str(c2));
    }

    // interior cells sit inside the closed region
    {
        const Region& r = sc.find_region(pick(ids));
        const RegionGrid& grid = sc.grid_of(r.id());
        bool inside = true;
        int seen = 0;
        for (const SubregionCell& c : grid.cells) {
            if (!c.interior_cell) continue;
            if (++seen > 4) break;
            for (const Point2& corner : sc.cell_rect(c.index))
                inside = inside && r.contains(corner, 1e-9);
            inside = inside && r.contains(c.representative, 1e-9);
        }
        require("PG.4", inside, ctx() + " A=" + r.id());

        // nonempty interior exactly when the region has subregion cells
        const bool has_subregions = !grid.cells.empty();
        const bool has_interior =
            !r.is_hole_region() && (grid.interior_count > 0 || r.measures().area > 0.0);
        require("PG.5", has_interior == has_subregions, ctx() + " A=" + r.id());
    }

    // closed region: boundary belongs to it, outward-offset points do not
    {
        const Region& r = sc.find_region(pick(ids));
        const Ring& ring = r.outer();
        const Point2 c = r.measures().centroid;
        const double off = 1e-4 * std::max(1e-9, r.measures().diameter);
        bool ok = true;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point2 a = ring[i], b = ring[(i + 1) % ring.size()];
            const Point2 m = (a + b) * 0.5;
            ok = ok && r.contains(a) && r.contains(m);
            Point2 n = perp(b - a) * -1.0;
            const double len = norm(n);
            if (len <= 0.0) continue;
            n = n * (1.0 / len);
            if (dot(n, m - c) < 0.0) n = n * -1.0;
            ok = ok && !r.contains(m + n * off);
        }
        require("PG.6", ok, ctx() + " A=" + r.id());
    }

    // circles: regular polygons have equidistant boundary vertices, a
    // two-radius polygon does not
    {
        const Point2 c{uniform_range(rng_, 3.0, 7.0), uniform_range(rng_, 3.0, 7.0)};
        const double radius = uniform_range(rng_, 0.5, 1.5);
        const int sides = uniform_int(rng_, 12, 40);
        const Ring circle = regular_polygon(c, radius, sides);
        const Region as_region("pg7circle", circle);
        Ring star;
        for (int i = 0; i < 16; ++i) {
            const double ang = 2.0 * kPi * i / 16.0;
            const double rr = (i % 2 == 0) ? radius : 1.35 * radius;
            star.push_back({c.x + rr * std::cos(ang), c.y + rr * std::sin(ang)});
        }
        require("PG.7",
                circle_like(circle, 1e-9) && as_region.measures().area > 0.0 &&
                    !circle_like(star, 1e-9),
                ctx() + " center=" + point_str(c) + " r=" + fmt_g(radius));
    }

    // congruence by equal area: translation preserves it, scaling breaks it
    {
        const Region& r = sc.find_region(pick(ids));
        const Region moved = r.translated({0.29, -0.31}, "pg8moved");
        Ring scaled_ring = r.outer();
        const Point2 c = r.measures().centroid;
        for (Point2& p : scaled_ring) p = c + (p - c) * 1.3;
        const Region scaled("pg8scaled", scaled_ring);
        require("PG.8", area_congruent(r, moved, 1e-9) && !area_congruent(r, scaled, 1e-9),
                ctx() + " A=" + r.id());
    }

    // two overlapping surfaces cut along a line: their boundaries cross an
    // even number of times (at least twice), unless one contains the other
    {
        const auto& pr = s.overlapping[static_cast<std::size_t>(
            uniform_int(rng_, 0, static_cast<int>(s.overlapping.size()) - 1))];
        const Region& ra = sc.find_region(pr.first);
        const Region& rb = sc.find_region(pr.second);
        const int crossings = proper_crossings(ra.outer(), rb.outer());
        const bool contained = all_vertices_inside(ra, rb) || all_vertices_inside(rb, ra);
        require("PG.9", (crossings >= 2 && crossings % 2 == 0) || (crossings == 0 && contained),
                ctx() + " A=" + pr.first + " B=" + pr.second +
                    " crossings=" + std::to_string(crossings));
    }

    // two crossing thick lines share a region of positive area
    {
        const Point2 q{uniform_range(rng_, 3.5, 6.5), uniform_range(rng_, 3.5, 6.5)};
        const double t1 = uniform_range(rng_, 0.0, kPi);
        const double t2 = t1 + uniform_range(rng_, 0.3, kPi - 0.3);
        const Point2 u1{std::cos(t1), std::sin(t1)};
        const Point2 u2{std::cos(t2), std::sin(t2)};
        const Region band1("pg10a", capsule_ring(q - u1 * 1.5, q + u1 * 1.5, 0.05));
        const Region band2("pg10b", capsule_ring(q - u2 * 1.5, q + u2 * 1.5, 0.05));
        require("PG.10", intersection_area(band1, band2) > 1e-6,
                ctx() + " at=" + point_str(q) + " angles=" + fmt_g(t1) + "," + fmt_g(t2));
    }

    // offset lines are locally parallel; rotated ones are not; strongly far
    // extensions mean parallel (no shared part)
    {
        const double theta = uniform_range(rng_, 0.0, kPi);
        const Point2 u{std::cos(theta), std::sin(theta)};
        const Point2 center{5.0 + uniform_range(rng_, -1.0, 1.0),
                            5.0 + uniform_range(rng_, -1.0, 1.0)};
        const Point2 p0 = center - u * 1.5, p1 = center + u * 1.5;
        const double offset = uniform_range(rng_, 0.5, 1.5);
        const Point2 n = perp(u);
        const PhysicalLine l1 = make_line("pl1", p0, p1, 0.1, sc);
        const PhysicalLine l2 = make_line("pl2", p0 + n * offset, p1 + n * offset, 0.1, sc);
        const double rot = 0.5;
        const Point2 ur{std::cos(theta + rot), std::sin(theta + rot)};
        const PhysicalLine l3 = make_line("pl3", center - ur * 1.5, center + ur * 1.5, 0.1, sc);

        const bool lp_pos = locally_parallel(l1, l2).holds;
        const bool lp_neg = locally_parallel(l1, l3).holds;
        require("PG.11", lp_pos && !lp_neg,
                ctx() + " theta=" + fmt_g(theta) + " offset=" + fmt_g(offset));

        const auto pp_pos = proximal_parallel(l1, l2, sc);
        const auto pp_neg = proximal_parallel(l1, l3, sc);
        const bool no_overlap = intersection_area(l1.region, l2.region) <= 1e-12;
        require("PG.12", pp_pos.holds && no_overlap && !pp_neg.holds,
                ctx() + " theta=" + fmt_g(theta) + " offset=" + fmt_g(offset));
    }
}

void Harness::d_trials(const SampledScene& s, const std::vector<std::string>& ids) {
    (void)ids;
    const Scene& sc = s.scene;

    // adjacent cell pieces along a line path carry one description and are
    // descriptively strongly near
    {
        const double y = 0.30;
        const PhysicalString band = make_string("d1line", {{1.0, y}, {3.5, y}}, 0.2, sc);
        const RegionGrid grid = subregion_grid(band.region, sc.cell_size(), sc.box());
        // pick two neighbouring cells from the clean mid-section of the band
        std::vector<const SubregionCell*> row;
        for (const SubregionCell& c : grid.cells)
            if (c.index.j == 0 && c.index.i >= 5 && c.index.i <= 12) row.push_back(&c);
        bool ok = row.size() >= 2;
        std::string detail = " cells=" + std::to_string(row.size());
        if (ok) {
            const std::size_t k = static_cast<std::size_t>(
                uniform_int(rng_, 0, static_cast<int>(row.size()) - 2));
            const FeatureMap shared_color{{"red", 0.9}, {"green", 0.1}, {"blue", 0.1}};
            const Region piece_a("d1c0", row[k]->polygon, {}, false, shared_color);
            const Region piece_b("d1c1", row[k + 1]->polygon, {}, false, shared_color);
            const double adjacency = shared_boundary_length(piece_a, piece_b, nullptr, nullptr);
            Scene micro(sc.box(), sc.epsilon(), sc.cell_size(), color_registry(),
                        {piece_a, piece_b});
            const bool dsn = descriptively_strongly_near(RegionGroup{"d1c0"}, RegionGroup{"d1c1"},
                                                         micro, micro.registry())
                                 .holds;
            const bool direct = features_match(describe(piece_a, micro.registry()),
                                               describe(piece_b, micro.registry()),
                                               micro.registry().tolerance);
            ok = adjacency > 0.0 && dsn && direct;
            detail += " i=" + std::to_string(row[k]->index.i);
        }
        require("d.1", ok, ctx() + detail);
    }

    // descriptive parallelism decomposes into strongly far sweeps plus
    // descriptive nearness, on known-positive and known-negative pairs
    {
        const Scene& psc = *parallel_scene_;
        const ProbeRegistry& reg = psc.registry();
        std::string a, b;
        bool expect = false;
        switch (t_ % 3) {
            case 0:
                a = par_a_[static_cast<std::size_t>(uniform_int(rng_, 0, 2))];
                b = par_b_[static_cast<std::size_t>(uniform_int(rng_, 0, 2))];
                expect = true;
                break;
            case 1:
                a = par_a_[0];
                b = par_crosser_;
                expect = false;
                break;
            default:
                a = par_a_[1];
                b = par_offcolor_;
                expect = false;
                break;
        }
        const Region& ra = psc.find_region(a);
        const Region& rb = psc.find_region(b);
        const auto api = descriptively_parallel(ra, rb, psc, reg, par_dir_);
        const bool route = parallel_regions(ra, rb, psc, par_dir_).holds &&
                           dnear(ra, rb, psc, reg).holds;
        require("d.8", api.holds == route && api.holds == expect,
                "A=" + a + " B=" + b + " expected=" + (expect ? "true" : "false"));
    }
}

AxiomReport Harness::run() {
    const auto start = std::chrono::steady_clock::now();
    build_materials();

    constexpr int kTrialsPerScene = 25;
    std::optional<SampledScene> sampled;
    std::vector<std::string> ids;
    for (t_ = 0; t_ < trials_; ++t_) {
        if (t_ % kTrialsPerScene == 0) {
            scene_seed_ = rng_();
            GeneratorOptions opt;
            opt.seed = scene_seed_;
            sampled = sample_scene(opt);
            ids.clear();
            for (std::size_t i = 0; i < sampled->scene.region_count(); ++i)
                ids.push_back(sampled->scene.region_at(i).id());
        }
        lodato_trials(*sampled, ids);
        strong_trials(*sampled, ids);
        descriptive_trials(*sampled, ids);
        point_trials();
        universe_trials();
        dsn_point_trials();
        pg_trials(*sampled, ids);
        d_trials(*sampled, ids);
    }

    for (const AxiomResult& r : report_.results)
        if (r.trials == 0)
            raise(ErrorKind::internal, "check-axioms self-test: axiom " + r.id + " not covered");

    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report_;
}

} // namespace

long AxiomReport::total_failures() const {
    long n = 0;
    for (const AxiomResult& r : results) n += r.failures;
    return n;
}

const AxiomResult* AxiomReport::find(const std::string& id) const {
    for (const AxiomResult& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

std::string AxiomReport::render() const {
    std::ostringstream out;
    out << "axiom conformance report\n";
    out << "seed: " << seed << "\n";
    out << "requested trials: " << requested_trials << "\n";
    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    auto lead = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
    };
    out << pad("id", 7) << lead("trials", 8) << lead("failures", 10)
        << "  counterexample\n";
    for (const AxiomResult& r : results) {
        out << pad(r.id, 7) << lead(std::to_string(r.trials), 8)
            << lead(std::to_string(r.failures), 10) << "  "
            << (r.first_counterexample.empty() ? "-" : r.first_counterexample) << "\n";
    }
    out << "total failures: " << total_failures() << "\n";
    return out.str();
}

std::vector<std::string> axiom_schema() {
    std::vector<std::string> ids;
    for (const AxiomSpec& s : kSchema) ids.push_back(s.id);
    return ids;
}

AxiomReport run_check_axioms(std::uint64_t seed, int trials) {
    Harness h(seed, trials);
    return h.run();
}

} // namespace proxregio
