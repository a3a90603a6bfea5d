#include "latwalk/height.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace latwalk {

namespace {

int dot3(const std::array<int, 3>& c, const std::array<std::int32_t, 3>& o) {
    return c[0] * o[0] + c[1] * o[1] + c[2] * o[2];
}

std::function<int(const VertexId&)> affine_eval(HeightFunction::Affine a) {
    return [a = std::move(a)](const VertexId& v) { return dot3(a.coeff, v.offset) + a.corr[v.cell]; };
}

/// Exact Lipschitz constant of an affine height over the edge classes.
int affine_lipschitz(const PeriodicSpec& spec, const HeightFunction::Affine& a) {
    int d = 0;
    for (const auto& e : spec.edges)
        d = std::max(d, std::abs(dot3(a.coeff, e.delta) + a.corr[e.to_cell] - a.corr[e.from_cell]));
    return d;
}

AutomorphismAction translation_hp(const GraphModel& g, const HeightFunction::Affine& a,
                                  std::array<std::int32_t, 3> delta) {
    auto act = lattice_translation(g, delta);
    act.height_preserving = (dot3(a.coeff, delta) == 0);
    return act;
}

}  // namespace

HeightFunction negate_height(const HeightFunction& h) {
    HeightFunction n;
    n.label = "-" + h.label;
    n.evaluate = [f = h.evaluate](const VertexId& v) { return -f(v); };
    n.group_generators = h.group_generators;
    n.lipschitz_d = h.lipschitz_d;
    if (h.affine) {
        HeightFunction::Affine a = *h.affine;
        for (auto& c : a.coeff) c = -c;
        for (auto& c : a.corr) c = -c;
        n.affine = a;
    }
    return n;
}

int compute_lipschitz(const GraphModel& g, const HeightFunction& h, int radius) {
    int d = 0;
    std::vector<VertexId> nb;
    for (const auto& v : ball_vertices(g, radius)) {
        const int hv = h.evaluate(v);
        nb.clear();
        g.neighbors(v, nb);
        for (const auto& u : nb) d = std::max(d, std::abs(h.evaluate(u) - hv));
    }
    return d;
}

GhfReport verify_ghf(const GraphModel& g, const HeightFunction& h, int radius,
                     std::size_t vertex_budget) {
    if (radius < 1) throw ConfigError("ghf verification radius must be >= 1");
    GhfReport rep;
    rep.radius = radius;
    auto ball = ball_vertices(g, radius);
    if (ball.size() > vertex_budget)
        throw BudgetError("verification ball exceeds the vertex budget");
    rep.checked_vertices = ball.size();

    if (h.evaluate(g.root()) != 0)
        rep.failures.push_back({"a", g.root(), "h(root) != 0"});

    std::vector<VertexId> nb;
    for (const auto& v : ball) {
        const int hv = h.evaluate(v);
        nb.clear();
        g.neighbors(v, nb);
        // (b) difference invariance under every generator.
        for (const auto& alpha : h.group_generators) {
            const VertexId av = alpha.apply(v);
            const int hav = h.evaluate(av);
            for (const auto& u : nb) {
                if (hav - h.evaluate(alpha.apply(u)) != hv - h.evaluate(u)) {
                    rep.failures.push_back(
                        {"b", v, "height difference not invariant under " + alpha.name});
                    break;
                }
            }
        }
        // (c) a strictly lower and a strictly higher neighbor.
        bool lower = false, higher = false;
        for (const auto& u : nb) {
            const int hu = h.evaluate(u);
            lower = lower || hu < hv;
            higher = higher || hu > hv;
        }
        if (!lower)
            rep.failures.push_back({"c", v, "no neighbor with height < " + std::to_string(hv)});
        if (!higher)
            rep.failures.push_back({"c", v, "no neighbor with height > " + std::to_string(hv)});
    }
    rep.passed = rep.failures.empty();
    return rep;
}

SquareGhfCertificate verify_square_ghf(const GraphModel& g, const HeightFunction& h,
                                       const AutomorphismAction& rho, int radius, int k_max) {
    if (radius < 1 || k_max < 1) throw ConfigError("square-ghf radius and k_max must be >= 1");
    SquareGhfCertificate cert;
    cert.rho_name = rho.name;
    cert.translation_checked_to = k_max;
    cert.commutation_radius = radius;

    auto ball = ball_vertices(g, radius);

    // rho must act as a graph automorphism on the ball.
    std::vector<VertexId> nb, nbr;
    for (const auto& v : ball) {
        if (rho.inverse(rho.apply(v)) != v)
            throw ConfigError("rho.inverse is not the inverse of rho.apply at " + v.str());
        const VertexId rv = rho.apply(v);
        nb.clear();
        g.neighbors(v, nb);
        nbr.clear();
        g.neighbors(rv, nbr);
        for (const auto& u : nb) {
            const VertexId ru = rho.apply(u);
            if (std::find(nbr.begin(), nbr.end(), ru) == nbr.end())
                throw ConfigError("rho does not preserve adjacency at edge " + v.str() + " ~ " +
                                  u.str());
        }
    }

    // (b) height preservation and (c) commutation with the generators.
    for (const auto& v : ball) {
        if (h.evaluate(rho.apply(v)) != h.evaluate(v))
            cert.failures.push_back({"b", v, "h(rho(v)) != h(v)"});
        for (const auto& alpha : h.group_generators) {
            if (rho.apply(alpha.apply(v)) != alpha.apply(rho.apply(v))) {
                cert.failures.push_back({"c", v, "rho does not commute with " + alpha.name});
                break;
            }
        }
    }

    // (a) translation at finite scale: no finite <rho>-orbit among ball
    // vertices, and positive minimum displacement for every k <= k_max.
    for (const auto& v : ball) {
        VertexId cur = v;
        std::vector<VertexId> orbit{v};
        bool finite = false;
        for (int k = 1; k <= k_max; ++k) {
            cur = rho.apply(cur);
            if (cur == v) {
                finite = true;
                break;
            }
            orbit.push_back(cur);
        }
        if (finite) {
            cert.failures.push_back(
                {"a", v, "finite set of " + std::to_string(orbit.size()) + " vertices fixed by rho"});
            if (cert.finite_fixed_set.empty()) cert.finite_fixed_set = orbit;
            break;
        }
    }

    // delta = max over the ball of d(v, rho(v)).
    int delta = 0;
    const int delta_cap = 128;
    for (const auto& v : ball) {
        int d = graph_distance(g, v, rho.apply(v), delta_cap);
        if (d < 0) throw ConfigError("d(v, rho(v)) exceeds cap " + std::to_string(delta_cap));
        delta = std::max(delta, d);
    }
    cert.delta = delta;

    if (cert.finite_fixed_set.empty()) {
        cert.min_displacement.assign(k_max, 0);
        for (int k = 1; k <= k_max; ++k) {
            int mink = -1;
            for (const auto& v : ball) {
                int d = graph_distance(g, v, apply_auto_pow(rho, v, k), k * std::max(delta, 1) + 1);
                if (d < 0) d = k * std::max(delta, 1) + 1;
                if (mink < 0 || d < mink) mink = d;
            }
            cert.min_displacement[k - 1] = mink;
            if (mink == 0)
                cert.failures.push_back({"a", g.root(), "zero displacement at k=" + std::to_string(k)});
        }
        cert.nondecreasing_trend = true;
        for (int k = 1; k < k_max; ++k)
            if (cert.min_displacement[k] < cert.min_displacement[k - 1])
                cert.nondecreasing_trend = false;
    }

    cert.passed = cert.failures.empty();
    return cert;
}

// ---------------------------------------------------------------------------
// Stiff paths.
// ---------------------------------------------------------------------------

namespace {

struct StiffSearch {
    const GraphModel& g;
    const HeightFunction& h;
    int target_orbit;
    int limit;
    std::vector<VertexId> path;
    std::vector<int> heights;
    std::unordered_set<VertexId, VertexIdHash> on_path;
    WalkRecord found;

    bool dfs() {
        std::vector<VertexId> nb;
        g.neighbors(path.back(), nb);
        for (const auto& u : nb) {
            if (on_path.count(u)) continue;
            const int hu = h.evaluate(u);
            if (g.orbit_index(u) == target_orbit) {
                // Interior vertices (indices 1..k) must be strictly between
                // the endpoint heights.
                bool stiff = true;
                for (std::size_t i = 1; i < path.size(); ++i)
                    if (!(heights.front() < heights[i] && heights[i] < hu)) stiff = false;
                if (stiff) {
                    found.vertices = path;
                    found.vertices.push_back(u);
                    return true;
                }
            }
            // Extend with u as an interior vertex; h > h(start) is necessary.
            if (static_cast<int>(path.size()) == limit || hu <= heights.front()) continue;
            path.push_back(u);
            heights.push_back(hu);
            on_path.insert(u);
            if (dfs()) return true;
            on_path.erase(u);
            heights.pop_back();
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

StiffPathTable compute_stiff_paths(const GraphModel& g, const HeightFunction& h, int search_cap) {
    StiffPathTable table;
    const int M = g.orbit_count;

    // Orbit representatives: first BFS occurrence of each orbit.
    std::vector<VertexId> reps(M, g.root());
    std::vector<bool> have(M, false);
    int found = 0;
    for (const auto& v : ball_vertices(g, std::max(4, M + 2))) {
        int o = g.orbit_index(v);
        if (o >= 0 && o < M && !have[o]) {
            have[o] = true;
            reps[o] = v;
            if (++found == M) break;
        }
    }
    if (found != M) throw ConfigError("could not find representatives of all orbits");
    table.orbit_reps = reps;

    if (M == 1) {
        table.r = 0;
        WalkRecord trivial;
        trivial.vertices = {reps[0]};
        table.paths[{0, 0}] = trivial;
        return table;
    }

    const int d = h.lipschitz_d > 0 ? h.lipschitz_d : compute_lipschitz(g, h, 4);
    const int bound = (M - 1) * (2 * d + 1) + 2;
    if (search_cap < bound)
        throw ConfigError("stiff search cap must be at least (M-1)(2d+1)+2 = " +
                          std::to_string(bound));

    int r = 0;
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            if (i == j) {
                WalkRecord trivial;
                trivial.vertices = {reps[i]};
                table.paths[{i, j}] = trivial;
                continue;
            }
            bool ok = false;
            for (int limit = 1; limit <= search_cap && !ok; ++limit) {
                StiffSearch s{g, h, j, limit, {reps[i]}, {h.evaluate(reps[i])}, {reps[i]}, {}};
                if (s.dfs()) {
                    s.found.kind = WalkKind::saw;
                    table.paths[{i, j}] = s.found;
                    r = std::max(r, s.found.length());
                    ok = true;
                }
            }
            if (!ok)
                throw ConstructionError("no stiff path from orbit " + std::to_string(i) +
                                        " to orbit " + std::to_string(j) + " within cap " +
                                        std::to_string(search_cap) +
                                        "; the height function looks unsuitable");
        }
    }
    table.r = r;
    if (r > bound)
        throw ConsistencyError("stiff constant r=" + std::to_string(r) +
                               " exceeds the bound (M-1)(2d+1)+2=" + std::to_string(bound));
    return table;
}

namespace {

WalkRecord monotone_path(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                         int t, int direction) {
    if (t < 0) throw ConfigError("monotone path length must be nonnegative");
    WalkRecord w;
    w.vertices = {start};
    VertexId cur = start;
    int hcur = h.evaluate(cur);
    std::vector<VertexId> nb;
    for (int i = 0; i < t; ++i) {
        nb.clear();
        g.neighbors(cur, nb);
        bool stepped = false;
        for (const auto& u : nb) {
            if (direction * (h.evaluate(u) - hcur) >= 1) {
                cur = u;
                hcur = h.evaluate(u);
                w.vertices.push_back(u);
                stepped = true;
                break;
            }
        }
        if (!stepped)
            throw ConsistencyError("no monotone neighbor at " + cur.str() +
                                   "; ghf axiom (c) is violated");
    }
    return w;
}

}  // namespace

WalkRecord descending_path(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                           int t) {
    return monotone_path(g, h, start, t, -1);
}

WalkRecord ascending_path(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                          int t) {
    return monotone_path(g, h, start, t, +1);
}

// ---------------------------------------------------------------------------
// Catalog heights and translations.
// ---------------------------------------------------------------------------

namespace {

HeightFunction make_affine_height(const GraphModel& g, std::string label,
                                  HeightFunction::Affine a,
                                  std::vector<AutomorphismAction> gens) {
    HeightFunction h;
    h.label = std::move(label);
    h.evaluate = affine_eval(a);
    h.group_generators = std::move(gens);
    h.lipschitz_d = affine_lipschitz(*g.periodic(), a);
    h.affine = std::move(a);
    return h;
}

HeightFunction make_horocyclic(const GraphModel& g, bool lifted) {
    HeightFunction h;
    h.label = "horocyclic";
    h.evaluate = [](const VertexId& v) {
        return static_cast<int>(v.word.size()) - v.offset[0];
    };
    const int branching = g.max_degree - (lifted ? 3 : 1);
    h.group_generators = {tree_ray_shift(branching, lifted), tree_root_swap(branching, lifted)};
    if (lifted) h.group_generators.push_back(tz_zshift());
    h.lipschitz_d = 1;
    return h;
}

}  // namespace

std::string default_height_label(const GraphModel& g) {
    if (g.name == "hex" || g.name == "sqoct") return "fig1";
    if (g.name == "T3" || g.name == "T4" || g.name == "T3xZ") return "horocyclic";
    if (is_catalog_graph(g.name)) return "x";
    return "coord0";
}

HeightFunction height_for(const GraphModel& g, const std::string& label_in) {
    const std::string label = label_in.empty() ? default_height_label(g) : label_in;
    const std::string& n = g.name;

    if ((n == "Z1" || n == "Z2" || n == "Z3" || n == "L2" || n == "L3") && label == "x") {
        HeightFunction::Affine a;
        a.coeff = {1, 0, 0};
        a.corr.assign(g.periodic()->cell_count, 0);
        std::vector<AutomorphismAction> gens;
        for (int i = 0; i < g.dimension; ++i) {
            std::array<std::int32_t, 3> d{0, 0, 0};
            d[i] = 1;
            gens.push_back(translation_hp(g, a, d));
        }
        return make_affine_height(g, label, a, std::move(gens));
    }
    if (n == "Z2" && label == "absx") {
        HeightFunction h;
        h.label = label;
        h.evaluate = [](const VertexId& v) { return std::abs(v.offset[0]); };
        auto yshift = lattice_translation(g, {0, 1, 0});
        yshift.height_preserving = true;
        h.group_generators = {yshift};
        h.lipschitz_d = 1;
        return h;
    }
    if (n == "hex" && (label == "fig1" || label == "x")) {
        HeightFunction::Affine a;
        a.coeff = {1, 1, 0};
        a.corr = {0, 1};
        std::vector<AutomorphismAction> gens = {translation_hp(g, a, {1, 0, 0}),
                                                translation_hp(g, a, {0, 1, 0})};
        return make_affine_height(g, label, a, std::move(gens));
    }
    if (n == "sqoct" && label == "fig1") {
        HeightFunction::Affine a;
        a.coeff = {4, 0, 0};
        a.corr = {0, 1, 1, 2};  // W N S E
        std::vector<AutomorphismAction> gens = {translation_hp(g, a, {1, 0, 0}),
                                                translation_hp(g, a, {0, 1, 0})};
        return make_affine_height(g, label, a, std::move(gens));
    }
    if ((n == "T3" || n == "T4") && label == "horocyclic") return make_horocyclic(g, false);
    if (n == "T3xZ" && label == "horocyclic") return make_horocyclic(g, true);

    if (!is_catalog_graph(n) && (label == "coord0" || label == "x")) {
        // User lattice: height along the first translation coordinate.
        HeightFunction::Affine a;
        a.coeff = {1, 0, 0};
        a.corr.assign(g.periodic()->cell_count, 0);
        std::vector<AutomorphismAction> gens;
        for (int i = 0; i < g.dimension; ++i) {
            std::array<std::int32_t, 3> d{0, 0, 0};
            d[i] = 1;
            gens.push_back(translation_hp(g, a, d));
        }
        return make_affine_height(g, "coord0", a, std::move(gens));
    }
    throw ConfigError("unknown height label '" + label + "' for graph " + n);
}

std::string default_rho_label(const GraphModel& g) {
    if (g.name == "Z2" || g.name == "Z3" || g.name == "sqoct") return "yshift";
    if (g.name == "hex") return "vshift";
    if (g.name == "T3xZ") return "zshift";
    if (!is_catalog_graph(g.name) && g.dimension >= 2) return "yshift";
    throw ConfigError("graph " + g.name + " has no catalog translation candidate");
}

AutomorphismAction rho_for(const GraphModel& g, const std::string& label_in) {
    const std::string label = label_in.empty() ? default_rho_label(g) : label_in;
    const std::string& n = g.name;
    if ((n == "Z2" || n == "Z3" || n == "sqoct" || !is_catalog_graph(n)) && label == "yshift") {
        auto a = lattice_translation(g, {0, 1, 0});
        a.name = "yshift";
        a.height_preserving = true;
        return a;
    }
    if (n == "Z3" && label == "zshift") {
        auto a = lattice_translation(g, {0, 0, 1});
        a.name = "zshift";
        a.height_preserving = true;
        return a;
    }
    if (n == "hex" && label == "vshift") {
        auto a = lattice_translation(g, {1, -1, 0});
        a.name = "vshift";
        a.height_preserving = true;
        return a;
    }
    if (n == "T3xZ" && label == "zshift") return tz_zshift();
    if (n == "L2" && label == "rungswap") return ladder_rung_swap();
    throw ConfigError("unknown rho label '" + label + "' for graph " + n);
}

}  // namespace latwalk
