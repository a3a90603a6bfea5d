#include <doctest.h>

#include <cmath>

#include "latwalk/analysis.hpp"

using namespace latwalk;

TEST_CASE("the cycle identity holds exactly on every small lattice") {
    for (const char* name : {"Z2", "hex", "L2", "L3", "sqoct"}) {
        GraphModel g = make_graph(name);
        INFO(name);
        IdentityReport rep = identity_check(g, 10);
        CHECK(rep.graph == name);
        for (const auto& r : rep.rows) {
            CHECK(r.two_p == r.c_nb);
            CHECK(r.c_nb <= r.c);
        }
    }
}

TEST_CASE("ordering: bridges and polygon roots never exceed the SAW count") {
    for (const char* name : {"Z2", "L2", "sqoct"}) {
        GraphModel g = make_graph(name);
        HeightFunction h = height_for(g, default_height_label(g));
        INFO(name);
        OrderingReport rep = ordering_check(g, h, 10);
        for (const auto& r : rep.rows) {
            CHECK(r.b <= r.c);
            CHECK(r.p + r.p <= r.c);
            if (r.n >= 1) {
                CHECK(r.root_b <= r.root_c + 1e-12);
                CHECK(r.root_2p <= r.root_c + 1e-12);
            }
        }
    }
}

TEST_CASE("submultiplicativity of SAWs and superadditivity of bridges") {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    auto c = count_saws(g, 12);
    auto b = count_bridges(g, h, 12);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; m + n <= 12; ++n) {
            CHECK(c.at(m + n) <= c.at(m) * c.at(n));
            CHECK(b.at(m) * b.at(n) <= b.at(m + n));
        }
}

TEST_CASE("the tree ratio estimate is exactly 2") {
    GraphModel g = make_graph("T3");
    GrowthEstimate est = estimate_mu(g, 12, EstimateMethod::ratio);
    CHECK(est.final_value == doctest::Approx(2.0).epsilon(1e-12));
    for (const auto& [n, v] : est.per_n)
        if (n >= 2) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("polygon growth on a tree reports zero growth, not an error") {
    GraphModel g = make_graph("T3");
    GrowthEstimate est = estimate_pi(g, 10, EstimateMethod::nth_root);
    CHECK(est.zero_growth);
    CHECK(est.final_value == 0.0);
}

TEST_CASE("beta takes the better of the two height orientations") {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    GrowthEstimate b = estimate_beta(g, h, 10, EstimateMethod::nth_root);
    GrowthEstimate m = estimate_mu(g, 10, EstimateMethod::nth_root);
    CHECK(b.final_value > 1.0);
    CHECK(b.final_value <= m.final_value + 1e-12);
}

TEST_CASE("bipartite pi estimates use even lengths only") {
    GraphModel g = make_graph("Z2");
    GrowthEstimate est = estimate_pi(g, 12, EstimateMethod::ratio);
    CHECK(!est.zero_growth);
    for (const auto& [n, v] : est.per_n) CHECK(n % 2 == 0);
    CHECK(est.final_value > 1.0);
    CHECK(est.final_value < 4.0);
}

TEST_CASE("too short a series is a config error") {
    GraphModel g = make_graph("Z2");
    CHECK_THROWS_AS(estimate_mu(g, 2, EstimateMethod::ratio), ConfigError);
}

TEST_CASE("growth diagnostic separates polynomial from exponential balls") {
    SubexpReport z2 = subexponential_diagnostic(make_graph("Z2"), 10);
    CHECK(z2.subexponential);
    CHECK(z2.monotone_decreasing);
    CHECK(z2.terminal_slope < 0.05);

    SubexpReport l2 = subexponential_diagnostic(make_graph("L2"), 10);
    CHECK(l2.subexponential);

    SubexpReport hex = subexponential_diagnostic(make_graph("hex"), 10);
    CHECK(hex.subexponential);

    SubexpReport t3 = subexponential_diagnostic(make_graph("T3"), 10);
    CHECK(!t3.subexponential);
    CHECK(t3.terminal_slope == doctest::Approx(std::log(2.0)).epsilon(0.08));
}

TEST_CASE("ballisticity probabilities are exact rationals") {
    GraphModel z2 = make_graph("Z2");
    BallisticityReport rep = ballisticity(z2, 3, 0.4);
    CHECK(rep.histogram.at(1) == Count(8));
    CHECK(rep.histogram.at(3) == Count(28));
    CHECK(rep.mass_le == Count(8));
    CHECK(rep.total == Count(36));
    CHECK(rep.probability() == doctest::Approx(8.0 / 36.0).epsilon(1e-15));

    GraphModel t3 = make_graph("T3");
    BallisticityReport tree = ballisticity(t3, 8, 0.5);  // P_8(d <= 4)
    CHECK(tree.mass_le == Count(0));                     // walks on a tree never backtrack
    CHECK(tree.total == Count(3) * Count(128));
}
