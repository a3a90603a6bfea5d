#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "latwalk/io.hpp"

using namespace latwalk;

namespace {

struct TempFile {
    std::string path;
    TempFile() : path(std::string(std::tmpnam(nullptr)) + ".jsonl") {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cache round trip: store, lookup, and full-series load") {
    TempFile tmp;
    GraphModel g = make_graph("Z2");
    auto series = count_saws(g, 6);
    const std::string fp = CountCache::fingerprint(g);
    {
        CountCache cache(tmp.path);
        CHECK(!cache.lookup(fp, "", Quantity::saw, 3).has_value());
        cache.store(fp, series);
        CHECK(cache.lookup(fp, "", Quantity::saw, 3) == Count(36));
    }
    // a fresh instance reads the same file
    CountCache reread(tmp.path);
    auto loaded = reread.load_series(fp, "", Quantity::saw, 6);
    REQUIRE(loaded.has_value());
    for (int n = 0; n <= 6; ++n) CHECK(loaded->at(n) == series.at(n));
    CHECK(!reread.load_series(fp, "", Quantity::saw, 7).has_value());  // incomplete
    CHECK(!reread.lookup(fp, "x", Quantity::bridge, 3).has_value());   // different key
}

TEST_CASE("corrupt and foreign-version cache lines are skipped, not fatal") {
    TempFile tmp;
    GraphModel g = make_graph("Z2");
    {
        CountCache cache(tmp.path);
        cache.store(CountCache::fingerprint(g), count_saws(g, 3));
    }
    {
        std::ofstream out(tmp.path, std::ios::app);
        out << "this is not json\n";
        out << R"({"v":"999","graph":"Z2","height":"","quantity":"saw","n":9,"count":"1"})" << "\n";
    }
    CountCache cache(tmp.path);
    CHECK(cache.lookup(CountCache::fingerprint(g), "", Quantity::saw, 3) == Count(36));
    CHECK(!cache.lookup(CountCache::fingerprint(g), "", Quantity::saw, 9).has_value());
}

TEST_CASE("storing twice does not duplicate lines") {
    TempFile tmp;
    GraphModel g = make_graph("Z1");
    auto series = count_saws(g, 4);
    CountCache cache(tmp.path);
    cache.store(CountCache::fingerprint(g), series);
    cache.store(CountCache::fingerprint(g), series);
    std::ifstream in(tmp.path);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 5);
}

TEST_CASE("fingerprints distinguish catalog names from user lattices") {
    GraphModel z2 = make_graph("Z2");
    CHECK(CountCache::fingerprint(z2) == "Z2");
    const char* base = R"({"name":"mine","dimension":2,"cells":1,"root_cell":0,
        "edges":[{"from_cell":0,"to_cell":0,"offset_delta":[1,0]},
                 {"from_cell":0,"to_cell":0,"offset_delta":[0,1]}]})";
    const char* other = R"({"name":"mine","dimension":2,"cells":1,"root_cell":0,
        "edges":[{"from_cell":0,"to_cell":0,"offset_delta":[1,0]},
                 {"from_cell":0,"to_cell":0,"offset_delta":[0,1]},
                 {"from_cell":0,"to_cell":0,"offset_delta":[1,1]}]})";
    auto fa = CountCache::fingerprint(load_lattice_json(base));
    auto fb = CountCache::fingerprint(load_lattice_json(other));
    CHECK(fa != "mine");  // structure hash appended
    CHECK(fa != fb);      // same name, different structure
}

TEST_CASE("series serialize with exact decimal strings") {
    auto series = count_saws(make_graph("Z2"), 4);
    auto j = to_json(series);
    CHECK(j["quantity"] == "saw");
    CHECK(j["counts"]["4"] == "100");  // string, not a number

    std::string csv = to_csv(series);
    CHECK(csv.find("n,count\n") == 0);
    CHECK(csv.find("4,100\n") != std::string::npos);
}

TEST_CASE("reports serialize with their verdict fields") {
    GraphModel g = make_graph("T3");
    auto sub = to_json(subexponential_diagnostic(g, 8));
    CHECK(sub["verdict"] == "exponential");

    GraphModel z2 = make_graph("Z2");
    HeightFunction h = height_for(z2, "absx");
    auto rep = to_json(verify_ghf(z2, h, 2));
    CHECK(rep["passed"] == false);
    CHECK(rep["failures"].size() > 0);
    CHECK(rep["failures"][0].contains("witness"));
}

TEST_CASE("2D polygons carry plot coordinates") {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    StiffPathTable stiff = compute_stiff_paths(g, h, 32);
    TubeSpec tube = build_tube(g, h, stiff, 1);
    std::vector<WalkRecord> one{tube.base_bridge};
    WalkRecord out = concatenate_bridges(g, h, tube, one, 1);
    PolygonAssembly pa = assemble_polygon(g, h, tube, rho_for(g, "yshift"), 3, 1, out, out);
    auto j = to_json(pa, g);
    REQUIRE(j.contains("plot"));
    CHECK(j["plot"].size() == pa.polygon.vertices.size());

    GraphModel z3 = make_graph("Z3");
    CHECK_THROWS_AS(plot_coords(z3, z3.root()), ConfigError);
}
