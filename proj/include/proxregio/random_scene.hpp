#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "proxregio/scene.hpp"

namespace proxregio {

// Deterministic uniform helpers (the standard distributions are not
// bit-stable across library implementations; these are).
double uniform_double(std::mt19937_64& rng);                       // [0, 1)
double uniform_range(std::mt19937_64& rng, double lo, double hi);  // [lo, hi)
int uniform_int(std::mt19937_64& rng, int lo, int hi);             // [lo, hi]

// Random convex polygon with 4..8 vertices: jittered radii on sorted angles,
// hulled to guarantee convexity.
Ring random_convex_ring(std::mt19937_64& rng, Point2 center, double radius);

struct GeneratorOptions {
    int region_count = 12;
    Box box{{0.0, 0.0}, {10.0, 10.0}};
    double epsilon = 1e-9;
    double cell_size = 0.25;
    std::uint64_t seed = 0;
    bool include_universe = false;  // add a box-covering region named "X"
};

// A generated scene with its constructed pair subpopulations.  Each listed
// pair's relation holds by construction and is re-verified by the generator:
//   overlapping:     positive shared interior area
//   touching:        contact at distance ~0 without interior overlap
//   narrow_gap:      separation in (epsilon, 2*epsilon] — near fails,
//                    strongly_far fails
//   well_separated:  separation > 2*epsilon
struct SampledScene {
    Scene scene;
    std::vector<std::pair<std::string, std::string>> overlapping;
    std::vector<std::pair<std::string, std::string>> touching;
    std::vector<std::pair<std::string, std::string>> narrow_gap;
    std::vector<std::pair<std::string, std::string>> well_separated;
};

SampledScene sample_scene(const GeneratorOptions& opt);

} // namespace proxregio
