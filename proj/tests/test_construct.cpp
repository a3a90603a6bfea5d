#include <doctest.h>

#include <set>

#include "latwalk/construct.hpp"

using namespace latwalk;

namespace {

struct Fixture {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    AutomorphismAction rho = rho_for(g, "yshift");
    StiffPathTable stiff = compute_stiff_paths(g, h, 32);
};

}  // namespace

TEST_CASE("the shift displacement bound delta is computed exactly") {
    Fixture f;
    CHECK(compute_delta(f.g, f.rho) == 1);
    GraphModel sq = make_graph("sqoct");
    CHECK(compute_delta(sq, rho_for(sq, "yshift")) >= 1);
}

TEST_CASE("tube construction on the square lattice, n = 1") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    CHECK(tube.n == 1);
    CHECK(tube.ell == 0);                      // the maximizer already sits in the root orbit
    CHECK(tube.p_prime == make_vertex(1, 0));  // unique 1-step bridge endpoint
    CHECK(tube.h_p == 1);
    CHECK(tube.base_bridge.length() == 1);
    CHECK(tube.gamma.apply(f.g.root()) == tube.p_prime);
    // D_1: root plus every vertex within distance 1 of l_1 at heights [1, 1]
    CHECK(tube.region.size() == 4);
    CHECK(tube.membership(f.g.root()));
    CHECK(tube.membership(make_vertex(1, 0)));
    CHECK(!tube.membership(make_vertex(-1, 0)));
    for (const auto& v : tube.region) {
        const int hv = f.h.evaluate(v);
        CHECK(((v == f.g.root()) || (hv >= 1 && hv <= tube.h_p)));
    }
}

TEST_CASE("tube tie-break picks the higher-height census maximizer at n = 2") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 2);
    CHECK(tube.p_prime == make_vertex(2, 0));
    CHECK(tube.h_p == 2);
    CHECK(tube.ell == 0);
    CHECK(tube.base_bridge.length() == 2);
}

TEST_CASE("bridge chaining translates each copy onto the previous endpoint") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    std::vector<WalkRecord> copies(3, tube.base_bridge);
    WalkRecord chain = concatenate_bridges(f.g, f.h, tube, copies, 3);
    CHECK(chain.length() == 3);
    CHECK(chain.front() == f.g.root());
    CHECK(chain.back() == make_vertex(3, 0));
    std::vector<int> hs;
    for (const auto& v : chain.vertices) hs.push_back(f.h.evaluate(v));
    CHECK(check_bridge(f.g, hs, chain.vertices));
}

TEST_CASE("the smallest disjoint shift power is found exhaustively") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    CHECK(find_disjoint_k(f.g, tube, f.rho, 1, 16) == 3);
    TubeSpec tube2 = build_tube(f.g, f.h, f.stiff, 2);
    CHECK(find_disjoint_k(f.g, tube2, f.rho, 1, 16) == 5);
}

TEST_CASE("connectors stay in their half-spaces and satisfy the length bound") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    const int k = 3, N = 1;
    Connectors c = build_connectors(f.g, f.h, tube, f.rho, k, N);
    CHECK(c.delta == 1);
    CHECK(c.t >= 1);
    // nu-minus: root -> rho^k(root), interior strictly below height 0
    CHECK(c.nu_minus.front() == f.g.root());
    CHECK(c.nu_minus.back() == apply_auto_pow(f.rho, f.g.root(), k));
    for (std::size_t i = 1; i + 1 < c.nu_minus.vertices.size(); ++i)
        CHECK(f.h.evaluate(c.nu_minus.vertices[i]) < 0);
    // nu-plus: top -> rho^k(top), interior strictly above the tube top
    const VertexId top = apply_auto_pow(tube.gamma, f.g.root(), N);
    CHECK(c.nu_plus.front() == top);
    CHECK(c.nu_plus.back() == apply_auto_pow(f.rho, top, k));
    for (std::size_t i = 1; i + 1 < c.nu_plus.vertices.size(); ++i)
        CHECK(f.h.evaluate(c.nu_plus.vertices[i]) > f.h.evaluate(top));
    // both connectors obey |nu| <= 2t + k*delta
    CHECK(c.nu_minus.length() <= 2 * c.t + k * c.delta);
    CHECK(c.nu_plus.length() <= 2 * c.t + k * c.delta);
}

TEST_CASE("assembled polygon n=1 N=1 k=3 closes with 24 edges") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    std::vector<WalkRecord> one{tube.base_bridge};
    WalkRecord out = concatenate_bridges(f.g, f.h, tube, one, 1);
    PolygonAssembly pa = assemble_polygon(f.g, f.h, tube, f.rho, 3, 1, out, out);
    CHECK(check_closed_polygon(f.g, pa.polygon.vertices));
    CHECK(pa.polygon.length() == 24);
    // length identity: 2(n+ell)N + |nu-| + |nu+|
    CHECK(pa.polygon.length() ==
          2 * (tube.n + tube.ell) * pa.N + pa.nu_minus.length() + pa.nu_plus.length());
    // the polygon passes through the root
    bool through_root = false;
    for (const auto& v : pa.polygon.vertices) through_root |= (v == f.g.root());
    CHECK(through_root);
}

TEST_CASE("distinct bridges assemble into distinct polygons: 9 at n=2, 81 at N=2") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 2);
    const int k = 5;
    auto rows = arithmetic_subsequence(f.g, f.h, tube, f.rho, k, 2, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].N == 1);
    CHECK(rows[0].predicted == Count(9));  // b_2^2 = 3^2
    CHECK(rows[0].materialized);
    CHECK(rows[0].distinct_polygons == Count(9));
    CHECK(rows[1].predicted == Count(81));
    CHECK(rows[1].distinct_polygons == Count(81));
    // arithmetic progression: m_{N+1} - m_N = 2(n + ell)
    CHECK(rows[1].m_N - rows[0].m_N == 2 * (tube.n + tube.ell));
    // the materialized count dominates the pigeonhole lower bound
    for (const auto& r : rows) {
        CHECK(r.lower_bound > 0.0);
        CHECK(r.distinct_polygons.to_double() >= r.lower_bound);
    }
}

TEST_CASE("assembly rejects non-lattice graphs up front") {
    GraphModel t3 = make_graph("T3");
    HeightFunction h = height_for(t3, "horocyclic");
    StiffPathTable stiff;  // never reached
    CHECK_THROWS_AS(build_tube(t3, h, stiff, 2), ConfigError);
}

TEST_CASE("k = 0 or N = 0 are config errors") {
    Fixture f;
    TubeSpec tube = build_tube(f.g, f.h, f.stiff, 1);
    CHECK_THROWS_AS(build_connectors(f.g, f.h, tube, f.rho, 0, 1), ConfigError);
    CHECK_THROWS_AS(build_connectors(f.g, f.h, tube, f.rho, 3, 0), ConfigError);
}

TEST_CASE("assembly works on the square-octagon lattice too") {
    GraphModel g = make_graph("sqoct");
    HeightFunction h = height_for(g, "fig1");
    AutomorphismAction rho = rho_for(g, "yshift");
    StiffPathTable stiff = compute_stiff_paths(g, h, 32);
    TubeSpec tube = build_tube(g, h, stiff, 2);
    int k = find_disjoint_k(g, tube, rho, 1, 32);
    std::vector<WalkRecord> one{tube.base_bridge};
    WalkRecord out = concatenate_bridges(g, h, tube, one, 1);
    PolygonAssembly pa = assemble_polygon(g, h, tube, rho, k, 1, out, out);
    CHECK(check_closed_polygon(g, pa.polygon.vertices));
    CHECK(pa.polygon.length() ==
          2 * (tube.n + tube.ell) * pa.N + pa.nu_minus.length() + pa.nu_plus.length());
}
