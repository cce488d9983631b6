#include "proxregio/scene_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "proxregio/errors.hpp"
#include "proxregio/strings.hpp"

namespace proxregio {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    raise(ErrorKind::parse, where + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key)) parse_fail(where, "unknown field '" + key + "'");
    }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, "missing field '" + key + "'");
    return *it;
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) parse_fail(where, "expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) parse_fail(where, "expected an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) parse_fail(where, "expected a string");
    return v.get<std::string>();
}

Point2 as_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) parse_fail(where, "expected a [x, y] pair");
    return {as_number(v[0], where + "[0]"), as_number(v[1], where + "[1]")};
}

Ring as_ring(const json& v, const std::string& where) {
    if (!v.is_array()) parse_fail(where, "expected an array of points");
    Ring ring;
    for (std::size_t i = 0; i < v.size(); ++i)
        ring.push_back(as_point(v[i], where + "[" + std::to_string(i) + "]"));
    return ring;
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json ring_json(const Ring& r) {
    json out = json::array();
    for (const Point2& p : r) out.push_back(point_json(p));
    return out;
}

} // namespace

SceneDocument parse_scene(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::parse, std::string("scene file is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) parse_fail("$", "scene file must be a JSON object");
    reject_unknown(root, {"version", "box", "epsilon", "cell_size", "probes", "regions",
                          "strings", "grids", "complexes"},
                   "$");

    const int version = as_int(require(root, "version", "$"), "$.version");
    if (version != kSceneFileVersion)
        parse_fail("$.version", "unsupported version " + std::to_string(version) +
                                    " (expected " + std::to_string(kSceneFileVersion) + ")");

    const json& jbox = require(root, "box", "$");
    if (!jbox.is_object()) parse_fail("$.box", "expected an object");
    reject_unknown(jbox, {"lo", "hi"}, "$.box");
    const Box box{as_point(require(jbox, "lo", "$.box"), "$.box.lo"),
                  as_point(require(jbox, "hi", "$.box"), "$.box.hi")};

    const double epsilon = as_number(require(root, "epsilon", "$"), "$.epsilon");
    const double cell_size = as_number(require(root, "cell_size", "$"), "$.cell_size");

    ProbeRegistry registry;
    const json& jprobes = require(root, "probes", "$");
    if (!jprobes.is_object()) parse_fail("$.probes", "expected an object");
    reject_unknown(jprobes, {"tolerance", "list"}, "$.probes");
    registry.tolerance = as_number(require(jprobes, "tolerance", "$.probes"), "$.probes.tolerance");
    const json& jlist = require(jprobes, "list", "$.probes");
    if (!jlist.is_array()) parse_fail("$.probes.list", "expected an array");
    for (std::size_t i = 0; i < jlist.size(); ++i) {
        const std::string where = "$.probes.list[" + std::to_string(i) + "]";
        const json& jp = jlist[i];
        if (!jp.is_object()) parse_fail(where, "expected an object");
        reject_unknown(jp, {"name", "kind"}, where);
        Probe p;
        p.name = as_string(require(jp, "name", where), where + ".name");
        const std::string kind = as_string(require(jp, "kind", where), where + ".kind");
        auto k = probe_kind_from_name(kind);
        if (!k) parse_fail(where + ".kind", "unknown probe kind '" + kind + "'");
        p.kind = *k;
        registry.probes.push_back(std::move(p));
    }

    std::vector<Region> regions;
    const json& jregions = require(root, "regions", "$");
    if (!jregions.is_array()) parse_fail("$.regions", "expected an array");
    for (std::size_t i = 0; i < jregions.size(); ++i) {
        const std::string where = "$.regions[" + std::to_string(i) + "]";
        const json& jr = jregions[i];
        if (!jr.is_object()) parse_fail(where, "expected an object");
        reject_unknown(jr, {"id", "outer", "holes", "is_hole", "features"}, where);
        const std::string id = as_string(require(jr, "id", where), where + ".id");
        const Ring outer = as_ring(require(jr, "outer", where), where + ".outer");
        std::vector<Ring> holes;
        if (auto it = jr.find("holes"); it != jr.end()) {
            if (!it->is_array()) parse_fail(where + ".holes", "expected an array of rings");
            for (std::size_t h = 0; h < it->size(); ++h)
                holes.push_back(as_ring((*it)[h], where + ".holes[" + std::to_string(h) + "]"));
        }
        bool is_hole = false;
        if (auto it = jr.find("is_hole"); it != jr.end()) {
            if (!it->is_boolean()) parse_fail(where + ".is_hole", "expected a boolean");
            is_hole = it->get<bool>();
        }
        FeatureMap features;
        if (auto it = jr.find("features"); it != jr.end()) {
            if (!it->is_object()) parse_fail(where + ".features", "expected an object");
            for (const auto& [fk, fv] : it->items())
                features[fk] = as_number(fv, where + ".features." + fk);
        }
        try {
            regions.emplace_back(id, outer, holes, is_hole, features);
        } catch (const Error& e) {
            parse_fail(where, std::string("invalid region: ") + e.what());
        }
    }

    // Strings need the box for fit validation; a scene without regions is the
    // cheapest carrier of that context.
    std::vector<PhysicalString> strings;
    if (auto it = root.find("strings"); it != root.end()) {
        if (!it->is_array()) parse_fail("$.strings", "expected an array");
        Scene shell(box, epsilon, cell_size, registry, {});
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "$.strings[" + std::to_string(i) + "]";
            const json& js = (*it)[i];
            if (!js.is_object()) parse_fail(where, "expected an object");
            reject_unknown(js, {"id", "spine", "width"}, where);
            const std::string id = as_string(require(js, "id", where), where + ".id");
            std::vector<Point2> spine = as_ring(require(js, "spine", where), where + ".spine");
            const double width = as_number(require(js, "width", where), where + ".width");
            try {
                strings.push_back(make_string(id, std::move(spine), width, shell));
            } catch (const Error& e) {
                parse_fail(where, std::string("invalid string: ") + e.what());
            }
        }
    }

    std::vector<AntipodalGrid> grids;
    if (auto it = root.find("grids"); it != root.end()) {
        if (!it->is_array()) parse_fail("$.grids", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "$.grids[" + std::to_string(i) + "]";
            const json& jg = (*it)[i];
            if (!jg.is_object()) parse_fail(where, "expected an object");
            reject_unknown(jg, {"id", "topology", "rows", "cols", "tolerance", "field"}, where);
            const std::string id = as_string(require(jg, "id", where), where + ".id");
            const std::string topo_name =
                as_string(require(jg, "topology", where), where + ".topology");
            auto topo = grid_topology_from_name(topo_name);
            if (!topo) parse_fail(where + ".topology", "unknown topology '" + topo_name + "'");
            const int rows = as_int(require(jg, "rows", where), where + ".rows");
            const int cols = as_int(require(jg, "cols", where), where + ".cols");
            try {
                AntipodalGrid grid(id, *topo, rows, cols, box);
                if (auto jt = jg.find("tolerance"); jt != jg.end())
                    grid.set_tolerance(as_number(*jt, where + ".tolerance"));
                if (auto jf = jg.find("field"); jf != jg.end()) {
                    if (!jf->is_array()) parse_fail(where + ".field", "expected an array");
                    std::vector<FeatureVector> field;
                    for (std::size_t c = 0; c < jf->size(); ++c) {
                        const json& jv = (*jf)[c];
                        const std::string vwhere = where + ".field[" + std::to_string(c) + "]";
                        if (!jv.is_array()) parse_fail(vwhere, "expected an array of numbers");
                        FeatureVector v;
                        for (std::size_t x = 0; x < jv.size(); ++x)
                            v.values.push_back(
                                as_number(jv[x], vwhere + "[" + std::to_string(x) + "]"));
                        field.push_back(std::move(v));
                    }
                    grid.set_field(std::move(field));
                }
                grids.push_back(std::move(grid));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::parse) throw;
                parse_fail(where, std::string("invalid grid: ") + e.what());
            }
        }
    }

    std::vector<NamedComplex> complexes;
    if (auto it = root.find("complexes"); it != root.end()) {
        if (!it->is_array()) parse_fail("$.complexes", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "$.complexes[" + std::to_string(i) + "]";
            const json& jc = (*it)[i];
            if (!jc.is_object()) parse_fail(where, "expected an object");
            reject_unknown(jc, {"id", "vertices", "simplices"}, where);
            NamedComplex nc;
            nc.id = as_string(require(jc, "id", where), where + ".id");
            const json& jverts = require(jc, "vertices", where);
            if (!jverts.is_array()) parse_fail(where + ".vertices", "expected an array");
            for (std::size_t v = 0; v < jverts.size(); ++v) {
                const std::string vwhere = where + ".vertices[" + std::to_string(v) + "]";
                const json& jv = jverts[v];
                if (!jv.is_object()) parse_fail(vwhere, "expected an object");
                reject_unknown(jv, {"center", "radius"}, vwhere);
                ComplexVertex cv;
                cv.center = as_point(require(jv, "center", vwhere), vwhere + ".center");
                cv.radius = as_number(require(jv, "radius", vwhere), vwhere + ".radius");
                nc.complex.vertices.push_back(cv);
            }
            const json& jsims = require(jc, "simplices", where);
            if (!jsims.is_array()) parse_fail(where + ".simplices", "expected an array");
            for (std::size_t s = 0; s < jsims.size(); ++s) {
                const std::string swhere = where + ".simplices[" + std::to_string(s) + "]";
                const json& js = jsims[s];
                if (!js.is_array()) parse_fail(swhere, "expected an array of vertex indices");
                SimplexIndices idx;
                for (std::size_t x = 0; x < js.size(); ++x)
                    idx.push_back(as_int(js[x], swhere + "[" + std::to_string(x) + "]"));
                nc.complex.simplices.push_back(std::move(idx));
            }
            complexes.push_back(std::move(nc));
        }
    }

    try {
        return SceneDocument{Scene(box, epsilon, cell_size, std::move(registry),
                                   std::move(regions), std::move(strings), std::move(grids)),
                             std::move(complexes)};
    } catch (const Error& e) {
        parse_fail("$", std::string("scene invariant violated: ") + e.what());
    }
}

std::string serialize_scene(const SceneDocument& doc) {
    const Scene& s = doc.scene;
    json root;
    root["version"] = kSceneFileVersion;
    root["box"] = {{"lo", point_json(s.box().lo)}, {"hi", point_json(s.box().hi)}};
    root["epsilon"] = s.epsilon();
    root["cell_size"] = s.cell_size();

    json jprobes;
    jprobes["tolerance"] = s.registry().tolerance;
    json jlist = json::array();
    for (const Probe& p : s.registry().probes)
        jlist.push_back({{"name", p.name}, {"kind", probe_kind_name(p.kind)}});
    jprobes["list"] = std::move(jlist);
    root["probes"] = std::move(jprobes);

    json jregions = json::array();
    for (const Region& r : s.regions()) {
        json jr;
        jr["id"] = r.id();
        jr["outer"] = ring_json(r.outer());
        json jholes = json::array();
        for (const Ring& h : r.holes()) jholes.push_back(ring_json(h));
        jr["holes"] = std::move(jholes);
        jr["is_hole"] = r.is_hole_region();
        json jfeat = json::object();
        for (const auto& [k, v] : r.features()) jfeat[k] = v;
        jr["features"] = std::move(jfeat);
        jregions.push_back(std::move(jr));
    }
    root["regions"] = std::move(jregions);

    json jstrings = json::array();
    for (const PhysicalString& ps : s.strings()) {
        json js;
        js["id"] = ps.id;
        js["spine"] = ring_json(ps.spine);
        js["width"] = ps.width;
        jstrings.push_back(std::move(js));
    }
    root["strings"] = std::move(jstrings);

    json jgrids = json::array();
    for (const AntipodalGrid& g : s.grids()) {
        json jg;
        jg["id"] = g.id();
        jg["topology"] = grid_topology_name(g.topology());
        jg["rows"] = g.rows();
        jg["cols"] = g.cols();
        jg["tolerance"] = g.tolerance();
        json jfield = json::array();
        for (const FeatureVector& v : g.field()) {
            json jv = json::array();
            for (double x : v.values) jv.push_back(x);
            jfield.push_back(std::move(jv));
        }
        jg["field"] = std::move(jfield);
        jgrids.push_back(std::move(jg));
    }
    root["grids"] = std::move(jgrids);

    json jcomplexes = json::array();
    for (const NamedComplex& nc : doc.complexes) {
        json jc;
        jc["id"] = nc.id;
        json jverts = json::array();
        for (const ComplexVertex& v : nc.complex.vertices)
            jverts.push_back({{"center", point_json(v.center)}, {"radius", v.radius}});
        jc["vertices"] = std::move(jverts);
        json jsims = json::array();
        for (const SimplexIndices& si : nc.complex.simplices) {
            json js = json::array();
            for (int idx : si) js.push_back(idx);
            jsims.push_back(std::move(js));
        }
        jc["simplices"] = std::move(jsims);
        jcomplexes.push_back(std::move(jc));
    }
    root["complexes"] = std::move(jcomplexes);

    return root.dump(2) + "\n";
}

SceneDocument load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::parse, "cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

void save_scene_file(const SceneDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::parse, "cannot write scene file '" + path + "'");
    out << serialize_scene(doc);
}

} // namespace proxregio
