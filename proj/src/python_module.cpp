#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxregio/axioms.hpp"
#include "proxregio/bundles.hpp"
#include "proxregio/commands.hpp"
#include "proxregio/description.hpp"
#include "proxregio/errors.hpp"
#include "proxregio/parallelism.hpp"
#include "proxregio/proximity.hpp"
#include "proxregio/random_scene.hpp"
#include "proxregio/scene.hpp"
#include "proxregio/scene_io.hpp"
#include "proxregio/simplicial.hpp"
#include "proxregio/strings.hpp"
#include "proxregio/svg.hpp"

namespace py = pybind11;
using namespace proxregio;

namespace {

py::object opt_point(const std::optional<Point2>& p) {
    if (!p) return py::none();
    return py::make_tuple(p->x, p->y);
}

py::dict verdict_dict(const RelationVerdict& v) {
    py::dict d;
    d["relation"] = relation_name(v.relation);
    d["holds"] = v.holds;
    d["gap"] = v.gap ? py::cast(*v.gap) : py::none();
    d["shared_point"] = opt_point(v.shared_point);
    if (v.shared_segment)
        d["shared_segment"] = py::make_tuple(py::make_tuple(v.shared_segment->first.x,
                                                            v.shared_segment->first.y),
                                             py::make_tuple(v.shared_segment->second.x,
                                                            v.shared_segment->second.y));
    else
        d["shared_segment"] = py::none();
    d["separator_count"] = v.separator.size();
    return d;
}

py::dict parallel_dict(const ParallelVerdict& v) {
    py::dict d;
    d["kind"] = parallel_kind_name(v.kind);
    d["holds"] = v.holds;
    d["gap"] = v.gap ? py::cast(*v.gap) : py::none();
    d["conservative"] = v.conservative;
    d["note"] = v.note;
    if (v.failing_pair)
        d["failing_pair"] = py::make_tuple(v.failing_pair->first, v.failing_pair->second);
    else
        d["failing_pair"] = py::none();
    return d;
}

// A scene document plus the generator subpopulations when generated.
struct PyScene {
    SceneDocument doc;
    std::vector<std::pair<std::string, std::string>> overlapping;
    std::vector<std::pair<std::string, std::string>> well_separated;

    const Scene& scene() const { return doc.scene; }
    const ProbeRegistry& reg() const { return doc.scene.registry(); }
};

PyScene load_scene(const std::string& path) { return {load_scene_file(path), {}, {}}; }

PyScene parse_scene_text(const std::string& text) { return {parse_scene(text), {}, {}}; }

PyScene generate_scene(std::uint64_t seed, int region_count) {
    GeneratorOptions opt;
    opt.seed = seed;
    opt.region_count = region_count;
    SampledScene s = sample_scene(opt);
    return {SceneDocument{std::move(s.scene), {}}, std::move(s.overlapping),
            std::move(s.well_separated)};
}

} // namespace

PYBIND11_MODULE(_proxregio, m) {
    m.doc() = "region-based proximity toolkit";

    py::register_exception<Error>(m, "ProxregioError");

    py::class_<PyScene>(m, "Scene")
        .def_static("load", &load_scene, py::arg("path"))
        .def_static("parse", &parse_scene_text, py::arg("text"))
        .def_static("generate", &generate_scene, py::arg("seed") = 0,
                    py::arg("region_count") = 12)
        .def("serialize", [](const PyScene& s) { return serialize_scene(s.doc); })
        .def("region_ids",
             [](const PyScene& s) {
                 std::vector<std::string> ids;
                 for (std::size_t i = 0; i < s.scene().region_count(); ++i)
                     ids.push_back(s.scene().region_at(i).id());
                 return ids;
             })
        .def_property_readonly("epsilon", [](const PyScene& s) { return s.scene().epsilon(); })
        .def_property_readonly("cell_size", [](const PyScene& s) { return s.scene().cell_size(); })
        .def_property_readonly("overlapping_pairs",
                               [](const PyScene& s) { return s.overlapping; })
        .def_property_readonly("well_separated_pairs",
                               [](const PyScene& s) { return s.well_separated; })
        .def("describe",
             [](const PyScene& s, const std::string& id) {
                 return describe(s.scene().find_region(id), s.reg()).values;
             },
             py::arg("id"))
        .def("near",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(near(a, b, s.scene()));
             },
             py::arg("a"), py::arg("b"))
        .def("strongly_near",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(strongly_near(a, b, s.scene()));
             },
             py::arg("a"), py::arg("b"))
        .def("far",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(far(a, b, s.scene()));
             },
             py::arg("a"), py::arg("b"))
        .def("strongly_far",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(strongly_far(a, b, s.scene()));
             },
             py::arg("a"), py::arg("b"))
        .def("dnear",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(descriptively_near(a, b, s.scene(), s.reg()));
             },
             py::arg("a"), py::arg("b"))
        .def("dsnear",
             [](const PyScene& s, const RegionGroup& a, const RegionGroup& b) {
                 return verdict_dict(descriptively_strongly_near(a, b, s.scene(), s.reg()));
             },
             py::arg("a"), py::arg("b"))
        .def("sew",
             [](const PyScene& s, const std::string& a, const std::string& b, int k) {
                 const Region& ra = s.scene().find_region(a);
                 const Region& rb = s.scene().find_region(b);
                 const SewResult r = sew(ra, rb, k, s.scene());
                 py::dict d;
                 d["bridges"] = r.bridges.size();
                 d["valid"] = r.validation.valid;
                 d["violations"] = r.validation.violations;
                 d["rectangular"] = r.rectangular;
                 const Scene augmented = r.augmented_scene(s.scene());
                 const auto chain = path_connected(ra, rb, augmented);
                 d["path"] = chain ? py::cast(*chain) : py::none();
                 return d;
             },
             py::arg("a"), py::arg("b"), py::arg("k") = 1)
        .def("classify",
             [](const PyScene& s, const std::string& rep) {
                 return class_of_regions(s.scene(), rep, s.reg()).members;
             },
             py::arg("representative"))
        .def("parallel",
             [](const PyScene& s, const std::string& a, const std::string& b, double dx,
                double dy, bool descriptive) {
                 const Region& ra = s.scene().find_region(a);
                 const Region& rb = s.scene().find_region(b);
                 const Point2 dir{dx, dy};
                 return parallel_dict(descriptive
                                          ? descriptively_parallel(ra, rb, s.scene(), s.reg(), dir)
                                          : parallel_regions(ra, rb, s.scene(), dir));
             },
             py::arg("a"), py::arg("b"), py::arg("dx") = 1.0, py::arg("dy") = 0.0,
             py::arg("descriptive") = false)
        .def("antipodal",
             [](const PyScene& s, const std::string& grid_id) -> py::object {
                 const auto match = find_antipodal_match(s.scene().find_grid(grid_id));
                 if (!match) return py::none();
                 py::dict d;
                 d["cell"] = match->cell;
                 d["antipode"] = match->antipode;
                 d["value"] = match->value.values;
                 return d;
             },
             py::arg("grid_id"))
        .def("render_svg",
             [](const PyScene& s, const std::vector<std::pair<std::string, std::string>>& pairs) {
                 std::vector<RenderOverlay> overlays;
                 for (const auto& [a, b] : pairs) {
                     const RelatorReport rr =
                         relator_eval(default_relator(), {a}, {b}, s.scene());
                     for (const RelationVerdict& v : rr.verdicts)
                         overlays.push_back({a, b, v.relation, v.holds});
                 }
                 return render_svg(s.scene(), overlays);
             },
             py::arg("pairs") = std::vector<std::pair<std::string, std::string>>{});

    m.def(
        "check_axioms",
        [](std::uint64_t seed, int trials) {
            const AxiomReport r = run_check_axioms(seed, trials);
            py::dict d;
            d["seed"] = r.seed;
            d["requested_trials"] = r.requested_trials;
            d["total_failures"] = r.total_failures();
            d["text"] = r.render();
            return d;
        },
        py::arg("seed") = 0, py::arg("trials") = 100);

    m.def("axiom_schema", &axiom_schema);

    m.def(
        "roll_cylinder",
        [](double width, double length) {
            const Cylinder c = roll_cylinder(width, length);
            return py::make_tuple(c.radius, c.lateral_area);
        },
        py::arg("sheet_width"), py::arg("sheet_length"));

    m.def(
        "run_command",
        [](const std::vector<std::string>& args) {
            const CommandResult r = run_command(args);
            return py::make_tuple(r.text, r.exit_code);
        },
        py::arg("args"));
}
