#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "latwalk/graph.hpp"

using namespace latwalk;

TEST_CASE("catalog names resolve and unknown names are rejected") {
    for (const auto& name : catalog_names()) {
        CHECK(is_catalog_graph(name));
        GraphModel g = make_graph(name);
        CHECK(g.name == name);
        CHECK(g.max_degree >= 2);
    }
    CHECK(!is_catalog_graph("Z9"));
    CHECK_THROWS_AS(make_graph("Z9"), ConfigError);
}

TEST_CASE("neighbor relation is symmetric and degree-bounded on a ball") {
    for (const char* name : {"Z2", "hex", "sqoct", "L2", "L3", "T3", "T3xZ"}) {
        GraphModel g = make_graph(name);
        for (const auto& v : ball_vertices(g, 3)) {
            auto nb = g.neighbors(v);
            CHECK(static_cast<int>(nb.size()) <= g.max_degree);
            for (const auto& u : nb) {
                auto back = g.neighbors(u);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
                CHECK(u != v);
            }
            // canonical order, no duplicates
            for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nb[i - 1] < nb[i]);
        }
    }
}

TEST_CASE("ball sizes match closed forms") {
    GraphModel z2 = make_graph("Z2");
    auto gz = ball_size(z2, 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(gz[static_cast<std::size_t>(n)] == Count(static_cast<std::uint64_t>(2 * n * n + 2 * n + 1)));

    GraphModel t3 = make_graph("T3");
    auto gt = ball_size(t3, 8);
    CHECK(gt[0] == Count(1));
    for (int n = 1; n <= 8; ++n)
        CHECK(gt[static_cast<std::size_t>(n)] == Count((3u << n) - 2));  // 3*2^n - 2

    GraphModel l2 = make_graph("L2");
    auto gl = ball_size(l2, 6);
    CHECK(gl[0] == Count(1));
    for (int n = 1; n <= 6; ++n)
        CHECK(gl[static_cast<std::size_t>(n)] == Count(static_cast<std::uint64_t>(4 * n)));
}

TEST_CASE("graph distance is a metric at small radius") {
    GraphModel g = make_graph("hex");
    auto ball = ball_vertices(g, 3);
    CHECK(graph_distance(g, g.root(), g.root(), 4) == 0);
    for (const auto& v : ball) {
        int d = graph_distance(g, g.root(), v, 8);
        CHECK(d >= 0);
        CHECK(d <= 3);
        CHECK(graph_distance(g, v, g.root(), 8) == d);
    }
}

TEST_CASE("vertex validation rejects malformed ids") {
    GraphModel hex = make_graph("hex");
    CHECK_THROWS_AS(hex.validate(VertexId{7, {0, 0, 0}, {}}), ConfigError);  // bad cell
    GraphModel z2 = make_graph("Z2");
    VertexId v = make_vertex(1, 2);
    v.word = "10";  // lattices carry no word component
    CHECK_THROWS_AS(z2.validate(v), ConfigError);
}

TEST_CASE("translations move the root where they claim") {
    GraphModel g = make_graph("sqoct");
    for (const auto& v : ball_vertices(g, 4)) {
        auto a = g.translation_to(v);
        if (v.cell != g.root().cell) {
            CHECK(!a.has_value());
            continue;
        }
        REQUIRE(a.has_value());
        CHECK(a->apply(g.root()) == v);
        CHECK(a->inverse(v) == g.root());
    }
}

TEST_CASE("automorphism powers compose with their inverses") {
    GraphModel g = make_graph("Z2");
    auto shift = lattice_translation(g, {0, 1, 0});
    VertexId v = make_vertex(2, -1);
    CHECK(apply_auto_pow(shift, v, 5) == make_vertex(2, 4));
    CHECK(apply_auto_pow(shift, v, -3) == make_vertex(2, -4));
    CHECK(apply_auto_pow(shift, apply_auto_pow(shift, v, 7), -7) == v);
}

TEST_CASE("user lattice files load and behave like the catalog twin") {
    const char* json = R"({
        "name": "user-square",
        "dimension": 2,
        "cells": 1,
        "root_cell": 0,
        "edges": [
            {"from_cell": 0, "to_cell": 0, "offset_delta": [1, 0]},
            {"from_cell": 0, "to_cell": 0, "offset_delta": [0, 1]}
        ]
    })";
    GraphModel user = load_lattice_json(json);
    GraphModel z2 = make_graph("Z2");
    CHECK(user.max_degree == 4);
    auto bu = ball_size(user, 5);
    auto bz = ball_size(z2, 5);
    for (int n = 0; n <= 5; ++n) CHECK(bu[static_cast<std::size_t>(n)] == bz[static_cast<std::size_t>(n)]);

    std::string path = std::string(std::tmpnam(nullptr)) + ".json";
    { std::ofstream(path) << json; }
    GraphModel from_file = load_lattice_file(path);
    CHECK(from_file.name == "user-square");
    std::remove(path.c_str());
}

TEST_CASE("malformed lattice descriptions are rejected") {
    CHECK_THROWS_AS(load_lattice_json("{"), ConfigError);
    CHECK_THROWS_AS(load_lattice_json(R"({"name":"x","dimension":2,"cells":1,"root_cell":0,"edges":[]})"),
                    ConfigError);  // disconnected cell: no edges at all
    CHECK_THROWS_AS(
        load_lattice_json(
            R"({"name":"x","dimension":2,"cells":1,"root_cell":0,"edges":[{"from_cell":0,"to_cell":0,"offset_delta":[0,0]}]})"),
        ConfigError);  // self-loop
}
