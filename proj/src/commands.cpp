#include "proxregio/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "proxregio/axioms.hpp"
#include "proxregio/bundles.hpp"
#include "proxregio/description.hpp"
#include "proxregio/errors.hpp"
#include "proxregio/format.hpp"
#include "proxregio/parallelism.hpp"
#include "proxregio/proximity.hpp"
#include "proxregio/random_scene.hpp"
#include "proxregio/scene.hpp"
#include "proxregio/scene_io.hpp"
#include "proxregio/simplicial.hpp"
#include "proxregio/svg.hpp"

namespace proxregio {

namespace {

const char* fmt_bool(bool b) { return b ? "true" : "false"; }

std::string point_str(Point2 p) { return "(" + fmt_g(p.x) + "," + fmt_g(p.y) + ")"; }

std::string group_str(const RegionGroup& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += g[i];
    }
    return s + "}";
}

std::string verdict_details(const RelationVerdict& v) {
    std::string s = fmt_bool(v.holds);
    if (v.gap) s += " gap=" + fmt_g(*v.gap);
    if (v.shared_point) s += " shared_point=" + point_str(*v.shared_point);
    if (v.shared_segment)
        s += " shared_segment=" + point_str(v.shared_segment->first) + "-" +
             point_str(v.shared_segment->second);
    if (v.shared_cell)
        s += " shared_cell=(" + std::to_string(v.shared_cell->i) + "," +
             std::to_string(v.shared_cell->j) + ")";
    if (!v.separator.empty()) s += " separators=" + std::to_string(v.separator.size());
    return s;
}

std::string parallel_details(const ParallelVerdict& v) {
    std::string s = fmt_bool(v.holds);
    if (v.gap) s += " gap=" + fmt_g(*v.gap);
    if (v.transversal)
        s += " transversal=" + point_str(v.transversal->first) + "-" +
             point_str(v.transversal->second);
    if (v.failing_pair) s += " failing_pair=(" + v.failing_pair->first + "," + v.failing_pair->second + ")";
    if (v.conservative) s += " conservative=true";
    if (!v.note.empty()) s += " note=" + v.note;
    return s;
}

struct SceneSource {
    std::string scene_path;       // empty -> generated
    std::uint64_t seed = 0;
    std::optional<SceneDocument> doc;
    std::optional<SampledScene> sampled;

    const Scene& load() {
        if (!scene_path.empty()) {
            if (!doc) doc = load_scene_file(scene_path);
            return doc->scene;
        }
        if (!sampled) {
            GeneratorOptions opt;
            opt.seed = seed;
            sampled = sample_scene(opt);
        }
        return sampled->scene;
    }

    std::string describe_source() const {
        return scene_path.empty() ? "generated seed=" + std::to_string(seed)
                                  : "file " + scene_path;
    }
};

void write_out(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::parameter, "cannot open output file: " + path);
    out << content;
}

const PhysicalString& find_string(const Scene& scene, const std::string& id) {
    for (const PhysicalString& s : scene.strings())
        if (s.id == id) return s;
    raise(ErrorKind::lookup, "unknown string id: " + id);
}

PhysicalLine line_from_string(const Scene& scene, const std::string& id) {
    const PhysicalString& s = find_string(scene, id);
    if (s.spine.size() != 2 || !s.straight())
        raise(ErrorKind::parameter, "string " + id + " is not a two-point straight line");
    return make_line(s.id, s.spine.front(), s.spine.back(), s.width, scene);
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"region-based proximity toolkit"};
    app.require_subcommand(1);

    // shared state filled by whichever subcommand is selected
    SceneSource src;
    std::string out_path;
    int trials = 500;
    RegionGroup group_a, group_b;
    std::string relation_query = "near";
    int sew_k = 1;
    std::string rep, rep_b;
    double tol = 1e-3;
    std::string kind = "regions";
    double dir_x = 1.0, dir_y = 0.0;
    bool descriptive = false;
    std::string grid_id;
    std::vector<std::string> pairs;

    auto add_common = [&](CLI::App* cmd, bool with_scene) {
        cmd->add_option("--seed", src.seed, "random seed")->envname("PROXREGIO_SEED");
        if (with_scene) cmd->add_option("--scene", src.scene_path, "scene file to load");
        cmd->add_option("--out", out_path, "write the report to this file");
    };

    CLI::App* cmd_axioms = app.add_subcommand("check-axioms", "run the axiom conformance suite");
    add_common(cmd_axioms, false);
    cmd_axioms->add_option("--trials", trials, "trials per axiom");

    CLI::App* cmd_relate = app.add_subcommand("relate", "evaluate proximity relations for two groups");
    add_common(cmd_relate, true);
    cmd_relate->add_option("--a", group_a, "member ids of the first group")->required();
    cmd_relate->add_option("--b", group_b, "member ids of the second group")->required();
    CLI::Option* relation_opt =
        cmd_relate->add_option("--relation", relation_query,
                               "relation deciding the exit status (near, strongly_near, far, "
                               "strongly_far, dnear, dsnear)")
            ->check(CLI::IsMember(
                {"near", "strongly_near", "far", "strongly_far", "dnear", "dsnear"}));

    CLI::App* cmd_sew = app.add_subcommand("sew", "sew two disjoint regions with bridge edges");
    add_common(cmd_sew, true);
    cmd_sew->add_option("--a", rep, "first region id")->required();
    cmd_sew->add_option("--b", rep_b, "second region id")->required();
    cmd_sew->add_option("--k", sew_k, "number of bridges");

    CLI::App* cmd_classify = app.add_subcommand("classify", "collect the descriptive class of a region");
    add_common(cmd_classify, true);
    cmd_classify->add_option("--rep", rep, "representative region id")->required();
    cmd_classify->add_option("--tol", tol, "feature-ball radius for the bound check");

    CLI::App* cmd_parallel = app.add_subcommand("parallel", "evaluate a parallelism predicate");
    add_common(cmd_parallel, true);
    cmd_parallel->add_option("--kind", kind,
                             "predicate: local, proximal, regions, descriptive, classes")
        ->check(CLI::IsMember({"local", "proximal", "regions", "descriptive", "classes"}));
    cmd_parallel->add_option("--a", rep, "first id (string id for local/proximal)")->required();
    cmd_parallel->add_option("--b", rep_b, "second id")->required();
    cmd_parallel->add_option("--dx", dir_x, "sweep direction x");
    cmd_parallel->add_option("--dy", dir_y, "sweep direction y");
    cmd_parallel->add_flag("--descriptive", descriptive, "descriptive pairwise predicate for classes");

    CLI::App* cmd_bundle = app.add_subcommand("bundle", "build fibre spaces over two classes");
    add_common(cmd_bundle, true);
    cmd_bundle->add_option("--rep-a", rep, "representative of the first class")->required();
    cmd_bundle->add_option("--rep-b", rep_b, "representative of the second class")->required();
    cmd_bundle->add_option("--dx", dir_x, "sweep direction x");
    cmd_bundle->add_option("--dy", dir_y, "sweep direction y");
    cmd_bundle->add_flag("--descriptive", descriptive, "descriptive class parallelism");

    CLI::App* cmd_antipodal = app.add_subcommand("antipodal", "search a grid for an antipodal match");
    add_common(cmd_antipodal, true);
    cmd_antipodal->add_option("--grid", grid_id, "antipodal grid id")->required();

    CLI::App* cmd_render = app.add_subcommand("render", "render the scene as SVG");
    add_common(cmd_render, true);
    cmd_render->add_option("--pair", pairs, "overlay pair id:id (repeatable)");

    std::vector<const char*> argv;
    argv.push_back("proxregio");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        CommandResult r;
        r.text = app.help();
        r.exit_code = 0;
        return r;
    } catch (const CLI::ParseError& e) {
        CommandResult r;
        r.text = std::string("usage error: ") + e.what() + "\n" + app.help();
        r.exit_code = 2;
        return r;
    }

    CommandResult result;
    std::ostringstream out;
    try {
        if (app.got_subcommand(cmd_axioms)) {
            const AxiomReport report = run_check_axioms(src.seed, trials);
            out << report.render();
            result.exit_code = report.total_failures() == 0 ? 0 : 1;
        } else if (app.got_subcommand(cmd_relate)) {
            const Scene& scene = src.load();
            const ProbeRegistry& reg = scene.registry();
            out << "relate report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "a: " << group_str(group_a) << "\n";
            out << "b: " << group_str(group_b) << "\n";
            const RelationVerdict v_near = near(group_a, group_b, scene);
            const RelationVerdict v_snear = strongly_near(group_a, group_b, scene);
            const RelationVerdict v_far = far(group_a, group_b, scene);
            const RelationVerdict v_sfar = strongly_far(group_a, group_b, scene);
            const RelationVerdict v_dnear = descriptively_near(group_a, group_b, scene, reg);
            const RelationVerdict v_dsnear =
                descriptively_strongly_near(group_a, group_b, scene, reg);
            out << "near: " << verdict_details(v_near) << "\n";
            out << "strongly_near: " << verdict_details(v_snear) << "\n";
            out << "far: " << verdict_details(v_far) << "\n";
            out << "strongly_far: " << verdict_details(v_sfar) << "\n";
            out << "dnear: " << verdict_details(v_dnear) << "\n";
            out << "dsnear: " << verdict_details(v_dsnear) << "\n";
            if (relation_opt->count() > 0) {
                bool queried = false;
                if (relation_query == "near") queried = v_near.holds;
                else if (relation_query == "strongly_near") queried = v_snear.holds;
                else if (relation_query == "far") queried = v_far.holds;
                else if (relation_query == "strongly_far") queried = v_sfar.holds;
                else if (relation_query == "dnear") queried = v_dnear.holds;
                else if (relation_query == "dsnear") queried = v_dsnear.holds;
                else raise(ErrorKind::parameter, "unknown relation: " + relation_query);
                out << "query: " << relation_query << " holds=" << fmt_bool(queried) << "\n";
                result.exit_code = queried ? 0 : 1;
            } else {
                result.exit_code = 0;
            }
        } else if (app.got_subcommand(cmd_sew)) {
            const Scene& scene = src.load();
            const Region& a = scene.find_region(rep);
            const Region& b = scene.find_region(rep_b);
            const SewResult sewn = sew(a, b, sew_k, scene);
            out << "sew report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "a: " << sewn.a_id << "\n";
            out << "b: " << sewn.b_id << "\n";
            out << "bridges: " << sewn.bridges.size() << "\n";
            for (std::size_t i = 0; i < sewn.bridges.size(); ++i) {
                const Bridge& br = sewn.bridges[i];
                out << "bridge " << i << ": " << point_str(br.a_anchor_point) << " -> "
                    << point_str(br.b_anchor_point) << "\n";
            }
            out << "vertices: " << sewn.complex.vertices.size() << "\n";
            out << "simplices: " << sewn.complex.simplices.size() << "\n";
            out << "valid: " << fmt_bool(sewn.validation.valid) << "\n";
            for (const std::string& v : sewn.validation.violations)
                out << "violation: " << v << "\n";
            out << "rectangular: " << fmt_bool(sewn.rectangular) << "\n";
            const Scene augmented = sewn.augmented_scene(scene);
            const auto chain = path_connected(a, b, augmented);
            out << "path_connected: " << fmt_bool(chain.has_value()) << "\n";
            if (chain) {
                out << "path:";
                for (const std::string& id : *chain) out << " " << id;
                out << "\n";
            }
            result.exit_code = (sewn.validation.valid && chain.has_value()) ? 0 : 1;
        } else if (app.got_subcommand(cmd_classify)) {
            const Scene& scene = src.load();
            const ProbeRegistry& reg = scene.registry();
            const RegionClass cls = class_of_regions(scene, rep, reg);
            out << "classify report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "representative: " << cls.representative << "\n";
            out << "members:";
            for (const std::string& id : cls.members) out << " " << id;
            out << "\n";
            const auto closure = family_closure(cls.members, scene, reg);
            out << "closure:";
            for (const std::string& id : closure) out << " " << id;
            out << "\n";
            out << "phi_bounded(tol=" << fmt_g(tol)
                << "): " << fmt_bool(phi_bounded(cls.members, rep, tol, scene, reg)) << "\n";
            result.exit_code = 0;
        } else if (app.got_subcommand(cmd_parallel)) {
            const Scene& scene = src.load();
            const ProbeRegistry& reg = scene.registry();
            const Point2 direction{dir_x, dir_y};
            ParallelVerdict v;
            if (kind == "local") {
                v = locally_parallel(line_from_string(scene, rep), line_from_string(scene, rep_b));
            } else if (kind == "proximal") {
                v = proximal_parallel(line_from_string(scene, rep), line_from_string(scene, rep_b),
                                      scene);
            } else if (kind == "regions") {
                v = parallel_regions(scene.find_region(rep), scene.find_region(rep_b), scene,
                                     direction);
            } else if (kind == "descriptive") {
                v = descriptively_parallel(scene.find_region(rep), scene.find_region(rep_b), scene,
                                           reg, direction);
            } else if (kind == "classes") {
                const RegionClass ca = class_of_regions(scene, rep, reg);
                const RegionClass cb = class_of_regions(scene, rep_b, reg);
                v = classes_parallel(ca, cb, scene, reg, direction, descriptive);
            } else {
                raise(ErrorKind::parameter, "unknown parallelism kind: " + kind);
            }
            out << "parallel report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "kind: " << kind << "\n";
            out << "a: " << rep << "\n";
            out << "b: " << rep_b << "\n";
            out << "direction: " << point_str(direction) << "\n";
            out << "parallel: " << parallel_details(v) << "\n";
            result.exit_code = v.holds ? 0 : 1;
        } else if (app.got_subcommand(cmd_bundle)) {
            const Scene& scene = src.load();
            const ProbeRegistry& reg = scene.registry();
            const Point2 direction{dir_x, dir_y};
            const RegionClass ca = class_of_regions(scene, rep, reg);
            const RegionClass cb = class_of_regions(scene, rep_b, reg);
            const FibreSpace fa = build_fibre_space(ca, scene, reg);
            const FibreSpace fb = build_fibre_space(cb, scene, reg);
            out << "bundle report\n";
            out << "scene: " << src.describe_source() << "\n";
            auto describe_space = [&](const char* name, const FibreSpace& fs) {
                out << name << " total:";
                for (const std::string& id : fs.total.members) out << " " << id;
                out << "\n" << name << " base size: " << fs.base.size() << "\n";
                out << name << " is_sheaf: " << fmt_bool(is_sheaf(fs)) << "\n";
            };
            describe_space("a", fa);
            describe_space("b", fb);
            const ParallelVerdict v = bundles_parallel(fa, fb, scene, direction, descriptive);
            out << "bundles_parallel: " << parallel_details(v) << "\n";
            result.exit_code = v.holds ? 0 : 1;
        } else if (app.got_subcommand(cmd_antipodal)) {
            const Scene& scene = src.load();
            const AntipodalGrid& grid = scene.find_grid(grid_id);
            out << "antipodal report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "grid: " << grid.id() << " topology=" << grid_topology_name(grid.topology())
                << " rows=" << grid.rows() << " cols=" << grid.cols() << "\n";
            const auto match = find_antipodal_match(grid);
            out << "match: " << fmt_bool(match.has_value()) << "\n";
            if (match) {
                out << "cell: " << match->cell << "\n";
                out << "antipode: " << match->antipode << "\n";
                out << "value:";
                for (double x : match->value.values) out << " " << fmt_g(x);
                out << "\n";
            }
            result.exit_code = match ? 0 : 1;
        } else if (app.got_subcommand(cmd_render)) {
            if (out_path.empty())
                raise(ErrorKind::parameter, "render requires --out FILE");
            const Scene& scene = src.load();
            std::vector<RenderOverlay> overlays;
            for (const std::string& spec_pair : pairs) {
                const auto colon = spec_pair.find(':');
                if (colon == std::string::npos)
                    raise(ErrorKind::parameter, "pair must be id:id, got " + spec_pair);
                const std::string a = spec_pair.substr(0, colon);
                const std::string b = spec_pair.substr(colon + 1);
                const ProximalRelator relator = default_relator();
                const RelatorReport rr = relator_eval(relator, {a}, {b}, scene);
                for (const RelationVerdict& v : rr.verdicts)
                    overlays.push_back({a, b, v.relation, v.holds});
            }
            const std::string svg = render_svg(scene, overlays);
            write_out(out_path, svg);
            out << "render report\n";
            out << "scene: " << src.describe_source() << "\n";
            out << "out: " << out_path << "\n";
            out << "regions: " << scene.region_count() << "\n";
            out << "overlays: " << overlays.size() << "\n";
            result.exit_code = 0;
            result.text = out.str();
            return result;  // --out already consumed by the SVG itself
        }
    } catch (const Error& e) {
        result.text = out.str() + "error: " + e.what() + "\n";
        result.exit_code = e.kind() == ErrorKind::parse ? 2 : 1;
        return result;
    }

    result.text = out.str();
    if (!out_path.empty()) write_out(out_path, result.text);
    return result;
}

} // namespace proxregio
