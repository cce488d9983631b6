#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace proxregio {

// One conformance entry: how many instances of the axiom were evaluated and
// how many violated it.  The first violating instance is kept verbatim.
struct AxiomResult {
    std::string id;
    std::string statement;
    long trials = 0;
    long failures = 0;
    std::string first_counterexample;  // empty while failures == 0
};

struct AxiomReport {
    std::uint64_t seed = 0;
    int requested_trials = 0;
    double elapsed_seconds = 0.0;
    std::vector<AxiomResult> results;  // schema order

    long total_failures() const;
    const AxiomResult* find(const std::string& id) const;
    std::string render() const;  // deterministic plain-text table
};

// The complete axiom identifier schema, in report order.
std::vector<std::string> axiom_schema();

// Runs every axiom check over seeded random scenes plus dedicated auxiliary
// scenes (point regions, universe region, parallel strips).  Every schema id
// must accumulate trials; an uncovered or unknown id raises an internal error
// (the coverage self-test).
AxiomReport run_check_axioms(std::uint64_t seed, int trials);

} // namespace proxregio
