#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "proxregio/commands.hpp"

using namespace proxregio;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(PROXREGIO_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("query verdicts drive the exit code") {
    const auto held = run_command({"relate", "--scene", fixture_path("squares.json"), "--a", "left",
                                   "--b", "right", "--relation", "far"});
    CHECK(held.exit_code == 0);
    CHECK(held.text.find("query: far holds=true") != std::string::npos);
    const auto failed = run_command({"relate", "--scene", fixture_path("squares.json"), "--a",
                                     "left", "--b", "right", "--relation", "strongly_near"});
    CHECK(failed.exit_code == 1);
    CHECK(failed.text.find("query: strongly_near holds=false") != std::string::npos);
    // Same-colored squares at a distance are descriptively near.
    const auto dn = run_command({"relate", "--scene", fixture_path("squares.json"), "--a", "left",
                                 "--b", "right", "--relation", "dnear"});
    CHECK(dn.exit_code == 0);
}

TEST_CASE("usage problems exit with code two") {
    CHECK(run_command({}).exit_code == 2);
    CHECK(run_command({"no-such-command"}).exit_code == 2);
    CHECK(run_command({"relate", "--scene", fixture_path("squares.json")}).exit_code == 2);
    const auto bad_relation =
        run_command({"relate", "--scene", fixture_path("squares.json"), "--a", "left", "--b",
                     "right", "--relation", "sideways"});
    CHECK(bad_relation.exit_code == 2);
    // Domain failures (bad scene content) exit with 2 as parse errors.
    const auto missing = run_command({"relate", "--scene", "no_such_file.json", "--a", "x", "--b",
                                      "y"});
    CHECK(missing.exit_code == 2);
    CHECK(missing.text.find("error:") != std::string::npos);
    // Unknown region ids are domain errors, not usage errors.
    const auto unknown = run_command({"relate", "--scene", fixture_path("squares.json"), "--a",
                                      "left", "--b", "ghost"});
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("help is available and succeeds") {
    const auto help = run_command({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.text.find("relate") != std::string::npos);
    CHECK(help.text.find("check-axioms") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const std::vector<std::vector<std::string>> invocations = {
        {"relate", "--scene", fixture_path("squares.json"), "--a", "left", "--b", "right"},
        {"check-axioms", "--seed", "11", "--trials", "20"},
        {"classify", "--scene", fixture_path("squares.json"), "--rep", "left"},
        {"sew", "--scene", fixture_path("squares.json"), "--a", "left", "--b", "right", "--k", "2"},
        {"parallel", "--scene", fixture_path("squares.json"), "--kind", "regions", "--a", "left",
         "--b", "right", "--dx", "0", "--dy", "1"},
        {"antipodal", "--scene", fixture_path("workbench.json"), "--grid", "g1"},
    };
    for (const auto& args : invocations) {
        CAPTURE(args[0]);
        const auto first = run_command(args);
        const auto second = run_command(args);
        CHECK(first.text == second.text);
        CHECK(first.exit_code == second.exit_code);
        CHECK_FALSE(first.text.empty());
    }
}

TEST_CASE("generated scenes are reproducible from the seed") {
    const auto a = run_command({"relate", "--seed", "5", "--a", "r0", "--b", "r1"});
    const auto b = run_command({"relate", "--seed", "5", "--a", "r0", "--b", "r1"});
    CHECK(a.text == b.text);
    const auto c = run_command({"relate", "--seed", "6", "--a", "r0", "--b", "r1"});
    CHECK(a.text != c.text);
}

TEST_CASE("the seed also arrives through the environment") {
    setenv("PROXREGIO_SEED", "5", 1);
    const auto via_env = run_command({"relate", "--a", "r0", "--b", "r1"});
    unsetenv("PROXREGIO_SEED");
    const auto via_flag = run_command({"relate", "--seed", "5", "--a", "r0", "--b", "r1"});
    CHECK(via_env.text == via_flag.text);
}

TEST_CASE("axiom checking reports every identifier with zero failures") {
    const auto r = run_command({"check-axioms", "--seed", "3", "--trials", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("total failures: 0") != std::string::npos);
    for (const std::string id : {"P0", "P5", "snN0", "snN6", "dP0", "dP5", "dsnP0", "dsnP6",
                                 "PG.1", "PG.12", "d.1", "d.8"}) {
        CAPTURE(id);
        CHECK(r.text.find("\n" + id + " ") != std::string::npos);
    }
}

TEST_CASE("rendering writes one svg element per region plus overlays") {
    const std::string out = "render_tmp.svg";
    const auto r = run_command({"render", "--scene", fixture_path("squares.json"), "--out", out,
                                "--pair", "left:right"});
    CHECK(r.exit_code == 0);
    const std::string svg = slurp(out);
    std::remove(out.c_str());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"region\"") == 2);
    // One overlay stroke per relation of the default relator.
    CHECK(count_occurrences(svg, "class=\"relation") == 4);
    // Byte-determinism holds for files as well.
    const std::string out2 = "render_tmp2.svg";
    run_command({"render", "--scene", fixture_path("squares.json"), "--out", out2, "--pair",
                 "left:right"});
    const std::string svg2 = slurp(out2);
    std::remove(out2.c_str());
    CHECK(svg == svg2);
}

TEST_CASE("reports can be copied to a file") {
    const std::string out = "report_tmp.txt";
    const auto r = run_command({"relate", "--scene", fixture_path("squares.json"), "--a", "left",
                                "--b", "right", "--out", out});
    CHECK(r.exit_code == 0);
    const std::string copy = slurp(out);
    std::remove(out.c_str());
    CHECK(copy == r.text);
}

TEST_CASE("antipodal queries read grids from the scene") {
    const auto hit = run_command({"antipodal", "--scene", fixture_path("workbench.json"), "--grid",
                                  "g1"});
    CHECK(hit.exit_code == 0);
    CHECK(hit.text.find("match: true") != std::string::npos);
    const auto nogrid = run_command({"antipodal", "--scene", fixture_path("workbench.json"),
                                     "--grid", "nope"});
    CHECK(nogrid.exit_code == 1);
}
