#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "scalecomplex/cli.hpp"
#include "scalecomplex/json_io.hpp"

using scx::json::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = scx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("scalecomplex_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("fvector")
{
    CHECK(run({"fvector"}).out == "1 12 66 208 399 456 282 72 3\n");
    CHECK(run({"fvector", "--pitches", "3"}).out == "1 3 3\n");
    const auto j = run({"fvector", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out) == Json::parse(R"({"f_vector":[1,12,66,208,399,456,282,72,3]})"));
    CHECK(run({"--format", "json", "fvector"}).out == j.out);
}

TEST_CASE("facets and classify")
{
    const auto f = run({"facets"});
    CHECK(f.code == 0);
    CHECK(count_lines(f.out) == 57);
    CHECK(f.out.find("{C,D,E,F,G,A,B}") != std::string::npos);

    const auto small = run({"facets", "--pitches", "6", "--run", "3"});
    std::string expected;
    for (std::uint64_t b : oracle::facets(6, 3))
        expected += scx::format_scale_numeric(scx::Scale(b)) + "\n";
    CHECK(small.out == expected);

    const auto js = Json::parse(run({"facets", "--format", "json"}).out);
    CHECK(js.at("facets").size() == 57);

    const auto c = run({"classify"});
    CHECK(c.code == 0);
    for (const char* name : {"diminished", "harmonic minor", "melodic minor", "harmonic major", "major", "augmented",
                             "whole tone"})
        CHECK(c.out.find(name) != std::string::npos);
    CHECK(Json::parse(run({"classify", "--format", "json"}).out).size() == 7);
}

TEST_CASE("homology")
{
    const auto h = Json::parse(run({"homology", "--format", "json"}).out);
    CHECK(h.at("reduced_betti") == Json::parse("[0,0,0,0,0,0,3,0,0]"));

    const auto tri = write_temp("triangle.json", R"({"ground_set_size":3,"facets":[[0,1],[1,2],[0,2]]})");
    const auto t = Json::parse(run({"homology", "--facets-file", tri, "--format", "json"}).out);
    CHECK(t.at("reduced_betti") == Json::parse("[0,0,1]"));

    const auto pt = write_temp("point.json", R"({"ground_set_size":1,"facets":[[0]]})");
    const auto p = Json::parse(run({"homology", "--facets-file", pt, "--format", "json"}).out);
    for (const auto& v : p.at("reduced_betti"))
        CHECK(v == 0);

    const auto bad = write_temp("bad.json", R"({"ground_set_size":3,"facets":[[0,1],)");
    const auto b = run({"homology", "--facets-file", bad});
    CHECK(b.code != 0);
    CHECK_FALSE(b.err.empty());
    CHECK(run({"homology", "--facets-file", "/nonexistent/scalecomplex.json"}).code != 0);
}

TEST_CASE("collapse, spheres and verify")
{
    const auto c = Json::parse(run({"collapse", "--to-dim", "5", "--format", "json"}).out);
    CHECK(c.at("max_face_cardinality") == 6);
    CHECK(c.at("complete") == true);
    CHECK(c.at("reduced_betti_after") == Json::parse("[0,0,0,0,0,0,3]"));
    CHECK(c.at("log").size() == 72);

    const auto s = Json::parse(run({"spheres", "--format", "json"}).out);
    CHECK(s.at("spheres").size() == 4);
    CHECK(s.at("pairwise_intersections").size() == 6);
    for (const auto& p : s.at("pairwise_intersections"))
        CHECK(p.at("is_facet") == true);
    CHECK(s.at("basis_ranks").back().at("rank") == 3);
    CHECK(s.at("spheres").at(0).at("hexatonics").size() == 27);

    const auto v = run({"verify"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    const auto vj = Json::parse(run({"verify", "--format", "json"}).out);
    CHECK(vj.is_object());
}

TEST_CASE("exit codes and determinism")
{
    CHECK(run({}).code == scx::cli::kUsageError);
    CHECK(run({"bogus"}).code == scx::cli::kUsageError);
    CHECK(run({"fvector", "--format", "xml"}).code == scx::cli::kUsageError);
    CHECK(run({"fvector", "--pitches", "2"}).code == scx::cli::kUsageError);
    CHECK(run({"fvector", "--pitches", "12", "--run", "13"}).code == scx::cli::kUsageError);
    CHECK(run({"spheres", "--pitches", "10"}).code == scx::cli::kUsageError);
    CHECK(run({"fvector", "--pitches", "30"}).code == scx::cli::kCapacityError);

    ::setenv("SCALE_COMPLEX_MAX_PITCHES", "8", 1);
    CHECK(run({"fvector", "--pitches", "10"}).code == scx::cli::kCapacityError);
    CHECK(run({"fvector", "--pitches", "8"}).code == 0);
    ::unsetenv("SCALE_COMPLEX_MAX_PITCHES");
    CHECK(run({"fvector", "--pitches", "10"}).code == 0);

    for (const char* cmd : {"fvector", "facets", "classify", "homology", "collapse", "spheres", "verify"}) {
        CAPTURE(cmd);
        CHECK(run({cmd}).out == run({cmd}).out);
        CHECK(run({cmd, "--format", "json"}).out == run({cmd, "--format", "json"}).out);
    }
}
