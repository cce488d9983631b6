#include "proxregio/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proxregio/format.hpp"

namespace proxregio {

namespace {

// Scene coordinates are y-up; SVG is y-down.  Flip inside the box.
struct Mapper {
    const Box& box;
    double flip(double y) const { return box.hi.y - (y - box.lo.y); }
};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

int channel_to_byte(double v) {
    return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

std::string region_fill(const Region& r, const ProbeRegistry& reg) {
    double rgb[3] = {0.7, 0.7, 0.7};
    bool any = false;
    for (const Probe& p : reg.probes) {
        int channel = -1;
        if (p.kind == ProbeKind::color_r) channel = 0;
        else if (p.kind == ProbeKind::color_g) channel = 1;
        else if (p.kind == ProbeKind::color_b) channel = 2;
        if (channel < 0) continue;
        rgb[channel] = evaluate_probe(p, r);
        any = true;
    }
    if (!any) return "rgb(178,178,178)";
    std::ostringstream out;
    out << "rgb(" << channel_to_byte(rgb[0]) << "," << channel_to_byte(rgb[1]) << ","
        << channel_to_byte(rgb[2]) << ")";
    return out.str();
}

const char* relation_stroke(Relation r) {
    switch (r) {
        case Relation::near: return "#2e7d32";
        case Relation::strongly_near: return "#1b5e20";
        case Relation::far: return "#ef6c00";
        case Relation::strongly_far: return "#b71c1c";
        case Relation::descriptively_near: return "#1565c0";
        case Relation::descriptively_strongly_near: return "#6a1b9a";
    }
    return "#000000";
}

void append_ring_path(std::ostringstream& out, const Ring& ring, const Mapper& m) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
        out << (i == 0 ? "M " : "L ") << fmt_g(ring[i].x) << " " << fmt_g(m.flip(ring[i].y))
            << " ";
    }
    out << "Z ";
}

} // namespace

std::string render_svg(const Scene& scene, const std::vector<RenderOverlay>& overlays) {
    const Box& box = scene.box();
    const Mapper m{box};
    const double stroke_w = box.diagonal() * 1e-3;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt_g(box.lo.x) << " " << fmt_g(box.lo.y) << " " << fmt_g(box.width()) << " "
        << fmt_g(box.height()) << "\">\n";
    svg << "  <rect x=\"" << fmt_g(box.lo.x) << "\" y=\"" << fmt_g(box.lo.y) << "\" width=\""
        << fmt_g(box.width()) << "\" height=\"" << fmt_g(box.height())
        << "\" fill=\"white\" stroke=\"#444444\" stroke-width=\"" << fmt_g(stroke_w) << "\"/>\n";

    for (std::size_t i = 0; i < scene.region_count(); ++i) {
        const Region& r = scene.region_at(i);
        std::ostringstream d;
        append_ring_path(d, r.outer(), m);
        for (const Ring& h : r.holes()) append_ring_path(d, h, m);
        const bool wire = r.is_hole_region();
        svg << "  <path class=\"region\" data-id=\"" << xml_escape(r.id()) << "\" d=\""
            << d.str() << "\" fill-rule=\"evenodd\" fill=\""
            << (wire ? std::string("none") : region_fill(r, scene.registry()))
            << "\" fill-opacity=\"0.6\" stroke=\"#222222\" stroke-width=\"" << fmt_g(stroke_w)
            << "\"/>\n";
    }

    for (const RenderOverlay& o : overlays) {
        const Region& ra = scene.find_region(o.a);
        const Region& rb = scene.find_region(o.b);
        const Point2 ca = ra.measures().centroid;
        const Point2 cb = rb.measures().centroid;
        svg << "  <line class=\"relation\" data-relation=\"" << relation_name(o.relation)
            << "\" data-holds=\"" << (o.holds ? "true" : "false") << "\" x1=\"" << fmt_g(ca.x)
            << "\" y1=\"" << fmt_g(m.flip(ca.y)) << "\" x2=\"" << fmt_g(cb.x) << "\" y2=\""
            << fmt_g(m.flip(cb.y)) << "\" stroke=\"" << relation_stroke(o.relation)
            << "\" stroke-width=\"" << fmt_g(2.0 * stroke_w) << "\""
            << (o.holds ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace proxregio
