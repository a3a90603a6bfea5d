#include <doctest.h>

#include "latwalk/walk.hpp"

using namespace latwalk;

namespace {
std::vector<VertexId> path2(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<VertexId> out;
    for (auto [x, y] : pts) out.push_back(make_vertex(x, y));
    return out;
}
}  // namespace

TEST_CASE("check_saw accepts simple paths and names the violation otherwise") {
    GraphModel g = make_graph("Z2");
    std::string why;
    CHECK(check_saw(g, path2({{0, 0}}), &why));
    CHECK(check_saw(g, path2({{0, 0}, {1, 0}, {1, 1}}), &why));
    CHECK(!check_saw(g, path2({{0, 0}, {2, 0}}), &why));          // not an edge
    CHECK(!why.empty());
    CHECK(!check_saw(g, path2({{0, 0}, {1, 0}, {0, 0}}), &why));  // revisits
}

TEST_CASE("check_bridge enforces the height sandwich") {
    GraphModel g = make_graph("Z2");
    auto hs = [](const std::vector<VertexId>& w) {
        std::vector<int> h;
        for (const auto& v : w) h.push_back(v.offset[0]);
        return h;
    };
    auto good = path2({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    CHECK(check_bridge(g, hs(good), good));
    auto flat = path2({{0, 0}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(check_bridge(g, hs(flat), flat));  // ends at the max, plateau allowed
    auto ends_low = path2({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    CHECK(!check_bridge(g, hs(ends_low), ends_low));
    auto starts_high = path2({{1, 0}, {0, 0}, {0, 1}, {1, 1}, {2, 1}});
    CHECK(!check_bridge(g, hs(starts_high), starts_high));  // interior not above start
    CHECK(check_bridge(g, {0}, path2({{0, 0}})));           // 0-step bridge, vacuous
}

TEST_CASE("check_closed_polygon wants a closed simple cycle") {
    GraphModel g = make_graph("Z2");
    auto square = path2({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(check_closed_polygon(g, square));
    CHECK(!check_closed_polygon(g, path2({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));  // open
    CHECK(!check_closed_polygon(g, path2({{0, 0}, {1, 0}, {0, 0}})));          // backtrack
}

TEST_CASE("reverse and translate preserve walk validity") {
    GraphModel g = make_graph("Z2");
    WalkRecord w;
    w.vertices = path2({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    WalkRecord r = reverse_walk(w);
    CHECK(r.vertices.front() == w.vertices.back());
    CHECK(r.vertices.back() == w.vertices.front());
    CHECK(check_saw(g, r.vertices));

    auto shift = lattice_translation(g, {0, 3, 0});
    WalkRecord t = translate_walk(shift, w);
    CHECK(t.vertices.front() == make_vertex(0, 3));
    CHECK(check_saw(g, t.vertices));
    CHECK(t.length() == w.length());
}

TEST_CASE("polygon signatures are rotation and reflection invariant") {
    WalkRecord a, b, c, other;
    a.vertices = path2({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    b.vertices = path2({{1, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 1}});  // rotated start
    c.vertices = path2({{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}});  // reversed
    other.vertices = path2({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}, {0, 0}});
    a.kind = b.kind = c.kind = other.kind = WalkKind::polygon;
    CHECK(polygon_edge_signature(a) == polygon_edge_signature(b));
    CHECK(polygon_edge_signature(a) == polygon_edge_signature(c));
    CHECK(polygon_edge_signature(a) != polygon_edge_signature(other));
}
