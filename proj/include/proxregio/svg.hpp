#pragma once

#include <string>
#include <vector>

#include "proxregio/proximity.hpp"
#include "proxregio/scene.hpp"

namespace proxregio {

// A relation verdict drawn between two regions as a styled connector.
struct RenderOverlay {
    std::string a;
    std::string b;
    Relation relation = Relation::near;
    bool holds = false;
};

// SVG 1.1 document: one shape element per region (holes via evenodd paths,
// fills from the regions' color features), plus one connector per overlay
// with a relation-specific stroke.  Output is deterministic.
std::string render_svg(const Scene& scene, const std::vector<RenderOverlay>& overlays = {});

} // namespace proxregio
