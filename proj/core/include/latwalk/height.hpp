#ifndef LATWALK_HEIGHT_HPP
#define LATWALK_HEIGHT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latwalk/graph.hpp"
#include "latwalk/walk.hpp"

namespace latwalk {

/// Integer height map on a graph, with the generator set of the acting group.
struct HeightFunction {
    std::string label;
    std::function<int(const VertexId&)> evaluate;
    std::vector<AutomorphismAction> group_generators;
    int lipschitz_d = 0;  // filled in by compute_lipschitz / the registry

    /// Affine form h = coeff . offset + corr[cell], when it exists.
    /// Enables the packed enumeration engine.
    struct Affine {
        std::array<int, 3> coeff{0, 0, 0};
        std::vector<int> corr;
    };
    std::optional<Affine> affine;
};

/// Negated height; (-h, H) is a ghf whenever (h, H) is.
HeightFunction negate_height(const HeightFunction& h);

struct GhfFailure {
    std::string axiom;  // "a", "b", "c", "adjacency", ...
    VertexId witness;
    std::string detail;
};

struct GhfReport {
    bool passed = false;
    int radius = 0;
    std::size_t checked_vertices = 0;
    std::vector<GhfFailure> failures;
};

struct SquareGhfCertificate {
    std::string rho_name;
    int delta = 0;  // max over the ball of d(v, rho(v))
    int translation_checked_to = 0;
    int commutation_radius = 0;
    bool passed = false;
    std::vector<GhfFailure> failures;
    std::vector<int> min_displacement;      // min over ball of d(v, rho^k(v)), k = 1..k_max
    bool nondecreasing_trend = false;
    std::vector<VertexId> finite_fixed_set;  // nonempty iff the translation axiom failed
};

struct StiffPathTable {
    int r = 0;
    std::vector<VertexId> orbit_reps;
    std::map<std::pair<int, int>, WalkRecord> paths;  // (from orbit, to orbit) -> stiff SAW
};

/// Max |h(x)-h(y)| over edges with both endpoints in the radius ball.
int compute_lipschitz(const GraphModel& g, const HeightFunction& h, int radius);

/// Checks the three ghf axioms for every vertex of the radius ball.
GhfReport verify_ghf(const GraphModel& g, const HeightFunction& h, int radius,
                     std::size_t vertex_budget = 2'000'000);

/// Checks height preservation, commutation with the generators, and the
/// translation property at finite scale k <= k_max.
SquareGhfCertificate verify_square_ghf(const GraphModel& g, const HeightFunction& h,
                                       const AutomorphismAction& rho, int radius, int k_max);

/// Minimal-length stiff SAWs between orbit representatives; r = max length.
StiffPathTable compute_stiff_paths(const GraphModel& g, const HeightFunction& h, int search_cap);

/// Greedy SAW (start, c_1, ..., c_t) with h(c_i) <= h(start) - i.
WalkRecord descending_path(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                           int t);
/// Mirror walk with h(c_i) >= h(start) + i.
WalkRecord ascending_path(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                          int t);

/// Catalog height functions.  Labels: "x" (Z^d, L2, L3, hex), "fig1" (hex,
/// sqoct), "horocyclic" (T3, T4, T3xZ), "absx" (Z2; fails axiom (c)).
HeightFunction height_for(const GraphModel& g, const std::string& label);
std::string default_height_label(const GraphModel& g);

/// Catalog candidate translations.  Labels: "yshift" (Z2, sqoct), "vshift"
/// (hex), "zshift" (T3xZ), "rungswap" (L2; fails the translation axiom).
AutomorphismAction rho_for(const GraphModel& g, const std::string& label);
std::string default_rho_label(const GraphModel& g);

}  // namespace latwalk

#endif
