#pragma once

#include <string>
#include <vector>

#include "proxregio/scene.hpp"
#include "proxregio/simplicial.hpp"

namespace proxregio {

inline constexpr int kSceneFileVersion = 1;

struct NamedComplex {
    std::string id;
    SimplicialComplex complex;
};

// A parsed scene file: the scene itself plus any serialized complexes.
struct SceneDocument {
    Scene scene;
    std::vector<NamedComplex> complexes;
};

// Strict parse: unknown keys, missing required keys, wrong types and version
// mismatches all raise parse errors naming the offending location.
SceneDocument parse_scene(const std::string& text);

// Canonical serialization with stable key order; parse(serialize(parse(t)))
// yields a byte-identical second serialization.
std::string serialize_scene(const SceneDocument& doc);

SceneDocument load_scene_file(const std::string& path);
void save_scene_file(const SceneDocument& doc, const std::string& path);

} // namespace proxregio
