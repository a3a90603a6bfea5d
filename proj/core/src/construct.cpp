#include "latwalk/construct.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace latwalk {

namespace {

AutomorphismAction power_action(const AutomorphismAction& rho, int k) {
    auto fwd = [rho, k](const VertexId& v) { return apply_auto_pow(rho, v, k); };
    auto bwd = [rho, k](const VertexId& v) { return apply_auto_pow(rho, v, -k); };
    return AutomorphismAction{rho.name + "^" + std::to_string(k), fwd, bwd,
                              rho.height_preserving};
}

/// BFS distance from `from` to the nearest vertex satisfying `pred`, or
/// cap+1 when none lies within the cap.
int dist_to_level(const GraphModel& g, const VertexId& from,
                  const std::function<bool(const VertexId&)>& pred, int cap) {
    if (pred(from)) return 0;
    std::unordered_set<VertexId, VertexIdHash> seen{from};
    std::deque<std::pair<VertexId, int>> queue{{from, 0}};
    std::vector<VertexId> nb;
    while (!queue.empty()) {
        auto [cur, d] = std::move(queue.front());
        queue.pop_front();
        if (d == cap) continue;
        nb.clear();
        g.neighbors(cur, nb);
        for (const auto& u : nb) {
            if (pred(u)) return d + 1;
            if (seen.insert(u).second) queue.emplace_back(u, d + 1);
        }
    }
    return cap + 1;
}

/// Canonical shortest path from -> to using only vertices allowed by `ok`
/// (endpoints are always allowed); empty when none exists within cap steps.
std::vector<VertexId> shortest_path_within(const GraphModel& g, const VertexId& from,
                                           const VertexId& to,
                                           const std::function<bool(const VertexId&)>& ok,
                                           int cap) {
    if (from == to) return {from};
    std::unordered_map<VertexId, VertexId, VertexIdHash> parent;
    std::deque<std::pair<VertexId, int>> queue{{from, 0}};
    parent.emplace(from, from);
    std::vector<VertexId> nb;
    bool found = false;
    while (!queue.empty() && !found) {
        auto [cur, d] = std::move(queue.front());
        queue.pop_front();
        if (d == cap) continue;
        nb.clear();
        g.neighbors(cur, nb);
        for (const auto& u : nb) {
            if (u != to && !ok(u)) continue;
            if (!parent.emplace(u, cur).second) continue;
            if (u == to) {
                found = true;
                break;
            }
            queue.emplace_back(u, d + 1);
        }
    }
    if (!found) return {};
    std::vector<VertexId> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

/// Loop erasure: scan the walk, and on revisiting a vertex cut the cycle out.
std::vector<VertexId> loop_erase(const std::vector<VertexId>& walk) {
    std::vector<VertexId> out;
    std::unordered_map<VertexId, std::size_t, VertexIdHash> pos;
    for (const auto& v : walk) {
        auto it = pos.find(v);
        if (it != pos.end()) {
            while (out.size() > it->second + 1) {
                pos.erase(out.back());
                out.pop_back();
            }
        } else {
            pos.emplace(v, out.size());
            out.push_back(v);
        }
    }
    return out;
}

std::vector<int> walk_heights(const HeightFunction& h, const WalkRecord& w) {
    std::vector<int> hs;
    hs.reserve(w.vertices.size());
    for (const auto& v : w.vertices) hs.push_back(h.evaluate(v));
    return hs;
}

void require_bridge(const GraphModel& g, const HeightFunction& h, const WalkRecord& w,
                    const std::string& what) {
    std::string why;
    if (!check_bridge(g, walk_heights(h, w), w.vertices, &why))
        throw ConstructionError(what + " is not a bridge: " + why);
}

}  // namespace

int compute_delta(const GraphModel& g, const AutomorphismAction& rho) {
    int delta = 0;
    const int cap = 64;
    std::vector<VertexId> samples;
    if (g.periodic()) {
        for (int c = 0; c < g.periodic()->cell_count; ++c)
            samples.push_back(VertexId{c, {0, 0, 0}, {}});
    } else {
        samples = ball_vertices(g, 3);
    }
    for (const auto& v : samples) {
        int d = graph_distance(g, v, rho.apply(v), cap);
        if (d < 0) throw ConfigError("d(v, rho(v)) exceeds cap " + std::to_string(cap));
        delta = std::max(delta, d);
    }
    return delta;
}

TubeSpec build_tube(const GraphModel& g, const HeightFunction& h, const StiffPathTable& stiff,
                    int n, const EnumOptions& opts) {
    if (n < 1) throw ConfigError("tube parameter n must be >= 1");
    if (!g.periodic())
        throw ConfigError("polygon construction supports periodic lattices only");

    auto census = bridge_endpoint_census(g, h, n, opts);
    if (census.empty())
        throw ConstructionError("no bridges of length " + std::to_string(n) +
                                "; cannot build a tube");

    // P_n: most-visited bridge endpoint; ties to the higher height, then the
    // canonically smallest vertex (map iteration is canonical ascending).
    TubeSpec tube;
    tube.n = n;
    const VertexId* best = nullptr;
    Count best_count;
    int best_h = 0;
    for (const auto& [v, c] : census) {
        const int hv = h.evaluate(v);
        if (!best || c > best_count || (c == best_count && hv > best_h)) {
            best = &v;
            best_count = c;
            best_h = hv;
        }
    }
    tube.p_n = *best;

    // Stiff extension into the root orbit.
    const int root_orbit = g.orbit_index(g.root());
    const int p_orbit = g.orbit_index(tube.p_n);
    WalkRecord ext;
    ext.vertices = {tube.p_n};
    if (p_orbit != root_orbit) {
        auto it = stiff.paths.find({p_orbit, root_orbit});
        if (it == stiff.paths.end())
            throw ConstructionError("no stiff path from orbit " + std::to_string(p_orbit) +
                                    " into the root orbit");
        const VertexId& rep = stiff.orbit_reps[static_cast<std::size_t>(p_orbit)];
        std::array<std::int32_t, 3> delta{};
        for (int i = 0; i < 3; ++i) delta[i] = tube.p_n.offset[i] - rep.offset[i];
        ext = translate_walk(lattice_translation(g, delta), it->second);
    }
    tube.ell = ext.length();
    tube.p_prime = ext.back();
    if (g.orbit_index(tube.p_prime) != root_orbit)
        throw ConstructionError("stiff extension did not reach the root orbit");
    tube.h_p = h.evaluate(tube.p_prime);
    if (tube.h_p < 1) throw ConstructionError("tube top has height < 1");
    if (n < tube.ell)
        throw ConstructionError("need n >= ell = " + std::to_string(tube.ell) +
                                "; increase n");

    // l_n: canonical shortest bridge root -> P_n' (BFS inside the height slab).
    const int hp = tube.h_p;
    auto slab = [&h, hp](const VertexId& v) {
        const int hv = h.evaluate(v);
        return 1 <= hv && hv <= hp;
    };
    auto path = shortest_path_within(g, g.root(), tube.p_prime, slab, n + tube.ell);
    if (path.empty())
        throw ConstructionError("no bridge from the root to " + tube.p_prime.str() +
                                " within length " + std::to_string(n + tube.ell));
    tube.base_bridge.vertices = std::move(path);
    tube.base_bridge.kind = WalkKind::bridge;
    require_bridge(g, h, tube.base_bridge, "l_n");

    // D_n: distance <= n from l_n, heights in [1, h(P_n')], plus the root.
    std::unordered_set<VertexId, VertexIdHash> near;
    {
        std::deque<std::pair<VertexId, int>> queue;
        for (const auto& v : tube.base_bridge.vertices)
            if (near.insert(v).second) queue.emplace_back(v, 0);
        std::vector<VertexId> nb;
        while (!queue.empty()) {
            auto [cur, d] = std::move(queue.front());
            queue.pop_front();
            if (d == n) continue;
            nb.clear();
            g.neighbors(cur, nb);
            for (const auto& u : nb)
                if (near.insert(u).second) queue.emplace_back(u, d + 1);
        }
    }
    auto keep = std::make_shared<std::unordered_set<VertexId, VertexIdHash>>();
    keep->insert(g.root());
    for (const auto& v : near)
        if (slab(v)) keep->insert(v);
    tube.region.assign(keep->begin(), keep->end());
    std::sort(tube.region.begin(), tube.region.end());
    tube.membership = [keep](const VertexId& v) { return keep->count(v) > 0; };

    auto gamma = g.translation_to(tube.p_prime);
    if (!gamma) throw ConstructionError("no translation gamma with gamma(root) = P_n'");
    tube.gamma = *gamma;
    return tube;
}

WalkRecord concatenate_bridges(const GraphModel& g, const HeightFunction& h, const TubeSpec& tube,
                               const std::vector<WalkRecord>& bridges, int N) {
    if (static_cast<int>(bridges.size()) != N || N < 1)
        throw ConfigError("expected exactly N >= 1 bridges");
    const int piece_len = tube.n + tube.ell;
    WalkRecord chain;
    for (const auto& b : bridges) {
        require_bridge(g, h, b, "input bridge");
        if (b.front() != g.root()) throw ConfigError("input bridge must start at the root");
        if (b.length() != piece_len)
            throw ConfigError("input bridge length " + std::to_string(b.length()) +
                              " != n + ell = " + std::to_string(piece_len));
        if (chain.vertices.empty()) {
            chain = b;
            continue;
        }
        auto tau = g.translation_to(chain.back());
        if (!tau)
            throw ConstructionError("chain endpoint " + chain.back().str() +
                                    " is not in the root orbit; cannot translate");
        WalkRecord shifted = translate_walk(*tau, b);
        chain.vertices.insert(chain.vertices.end(), shifted.vertices.begin() + 1,
                              shifted.vertices.end());
    }
    chain.kind = WalkKind::bridge;
    std::string why;
    if (!check_bridge(g, walk_heights(h, chain), chain.vertices, &why))
        throw ConsistencyError("translate collision while chaining bridges: " + why);
    return chain;
}

int find_disjoint_k(const GraphModel& g, const TubeSpec& tube, const AutomorphismAction& rho,
                    int N, int k_cap) {
    if (N < 1 || k_cap < 1) throw ConfigError("N and k_cap must be >= 1");
    std::unordered_set<VertexId, VertexIdHash> s_n;
    for (int i = 0; i < N; ++i)
        for (const auto& v : tube.region) s_n.insert(apply_auto_pow(tube.gamma, v, i));

    std::size_t min_overlap = s_n.size();
    for (int k = 1; k <= k_cap; ++k) {
        std::size_t overlap = 0;
        for (const auto& v : s_n)
            if (s_n.count(apply_auto_pow(rho, v, k))) ++overlap;
        if (overlap == 0) return k;
        min_overlap = std::min(min_overlap, overlap);
    }
    throw ConstructionError("S_N and rho^k(S_N) overlap for every k <= " +
                            std::to_string(k_cap) + " (smallest overlap " +
                            std::to_string(min_overlap) + " vertices)");
}

namespace {

/// Monotone escape: greedy walk from `start` in the given height direction
/// until the BFS distance to the level set `stuck` exceeds k*delta.
WalkRecord monotone_escape(const GraphModel& g, const HeightFunction& h, const VertexId& start,
                           int direction, const std::function<bool(const VertexId&)>& level,
                           int kdelta, int deficit = 0) {
    const int lip = h.lipschitz_d > 0 ? h.lipschitz_d : 1;
    const int t_cap = (kdelta + deficit) * lip + 2;
    for (int t = 0; t <= t_cap; ++t) {
        WalkRecord w = direction < 0 ? descending_path(g, h, start, t)
                                     : ascending_path(g, h, start, t);
        if (dist_to_level(g, w.back(), level, kdelta) > kdelta) return w;
    }
    throw ConsistencyError("monotone escape did not clear the level set within " +
                           std::to_string(t_cap) + " steps");
}

WalkRecord join_across(const GraphModel& g, int kdelta, const WalkRecord& a, const WalkRecord& b,
                       const std::function<bool(const VertexId&)>& inside,
                       const std::string& what) {
    // a: start -> top_a; b: start_b -> top_b.  Result: start -> start_b.
    auto cross = shortest_path_within(g, a.back(), b.back(), inside,
                                      kdelta + a.length() + b.length() + 8);
    if (cross.empty())
        throw ConstructionError("no crossing path for " + what + " between " + a.back().str() +
                                " and " + b.back().str());
    std::vector<VertexId> all = a.vertices;
    all.insert(all.end(), cross.begin() + 1, cross.end());
    WalkRecord brev = reverse_walk(b);
    all.insert(all.end(), brev.vertices.begin() + 1, brev.vertices.end());
    WalkRecord out;
    out.vertices = loop_erase(all);
    out.kind = WalkKind::saw;
    std::string why;
    if (!check_saw(g, out.vertices, &why))
        throw ConstructionError(what + " is not a simple path: " + why);
    return out;
}

/// nu-minus: root -> rho^k(root) through strictly negative heights.
WalkRecord build_minus(const GraphModel& g, const HeightFunction& h,
                       const AutomorphismAction& rho, int k, int delta, int* t_out) {
    const int kdelta = k * std::max(delta, 1);
    auto at_zero = [&h](const VertexId& v) { return h.evaluate(v) == 0; };
    WalkRecord nu1 = monotone_escape(g, h, g.root(), -1, at_zero, kdelta);
    *t_out = nu1.length();
    auto rk = power_action(rho, k);
    WalkRecord nu3 = translate_walk(rk, nu1);
    auto negative = [&h](const VertexId& v) { return h.evaluate(v) < 0; };
    // The crossing must fit in k*delta steps (shift bound); longer means the
    // square-ghf certificate lied.
    auto cross = shortest_path_within(g, nu1.back(), nu3.back(), negative, kdelta);
    if (cross.empty())
        throw ConsistencyError("no crossing of length <= k*delta between " + nu1.back().str() +
                               " and its rho^k image; shift bound violated");
    std::vector<VertexId> all = nu1.vertices;
    all.insert(all.end(), cross.begin() + 1, cross.end());
    WalkRecord back = reverse_walk(nu3);
    all.insert(all.end(), back.vertices.begin() + 1, back.vertices.end());
    WalkRecord nu;
    nu.vertices = loop_erase(all);
    nu.kind = WalkKind::saw;
    std::string why;
    if (!check_saw(g, nu.vertices, &why))
        throw ConstructionError("nu-minus is not a simple path: " + why);
    for (std::size_t i = 1; i + 1 < nu.vertices.size(); ++i)
        if (h.evaluate(nu.vertices[i]) >= 0)
            throw ConstructionError("nu-minus interior " + nu.vertices[i].str() +
                                    " has nonnegative height");
    if (nu.length() > 2 * *t_out + kdelta)
        throw ConsistencyError("nu-minus length exceeds 2t + k*delta");
    return nu;
}

/// nu-plus between two (possibly different) bridge endpoints: from e_out to
/// rho^k(e_back), through heights above max(h(e_out), h(e_back)).
WalkRecord build_plus(const GraphModel& g, const HeightFunction& h, const AutomorphismAction& rho,
                      int k, int delta, const VertexId& e_out, const VertexId& e_back,
                      int* t_out) {
    const int kdelta = k * std::max(delta, 1);
    const int hm = std::max(h.evaluate(e_out), h.evaluate(e_back));
    auto low = [&h, hm](const VertexId& v) { return h.evaluate(v) <= hm; };
    auto high = [&h, hm](const VertexId& v) { return h.evaluate(v) > hm; };
    // Endpoints below hm need extra ascent steps to cover the height deficit.
    WalkRecord a = monotone_escape(g, h, e_out, +1, low, kdelta, hm - h.evaluate(e_out));
    WalkRecord b = monotone_escape(g, h, apply_auto_pow(rho, e_back, k), +1, low, kdelta,
                                   hm - h.evaluate(e_back));
    *t_out = std::max(a.length(), b.length());
    WalkRecord nu = join_across(g, kdelta, a, b, high, "nu-plus");
    // Interiors stay strictly above the lower endpoint height (and above hm
    // entirely when the two endpoints share a height).
    const int hlo = std::min(h.evaluate(e_out), h.evaluate(e_back));
    for (std::size_t i = 1; i + 1 < nu.vertices.size(); ++i)
        if (h.evaluate(nu.vertices[i]) <= hlo)
            throw ConstructionError("nu-plus interior " + nu.vertices[i].str() +
                                    " dips to height " + std::to_string(h.evaluate(nu.vertices[i])));
    return nu;
}

}  // namespace

Connectors build_connectors(const GraphModel& g, const HeightFunction& h, const TubeSpec& tube,
                            const AutomorphismAction& rho, int k, int N) {
    if (k < 1 || N < 1) throw ConfigError("k and N must be >= 1");
    Connectors c;
    c.delta = compute_delta(g, rho);
    int t_minus = 0, t_plus = 0;
    c.nu_minus = build_minus(g, h, rho, k, c.delta, &t_minus);
    const VertexId top = apply_auto_pow(tube.gamma, g.root(), N);  // = P_n^N
    c.nu_plus = build_plus(g, h, rho, k, c.delta, top, top, &t_plus);
    c.t = std::max(t_minus, t_plus);
    const int kdelta = k * std::max(c.delta, 1);
    if (c.nu_minus.length() > 2 * c.t + kdelta || c.nu_plus.length() > 2 * c.t + kdelta)
        throw ConsistencyError("connector length exceeds the 2t + k*delta bound");
    return c;
}

PolygonAssembly assemble_polygon(const GraphModel& g, const HeightFunction& h,
                                 const TubeSpec& tube, const AutomorphismAction& rho, int k,
                                 int N, const WalkRecord& bridge_out,
                                 const WalkRecord& bridge_back) {
    require_bridge(g, h, bridge_out, "bridge_out");
    require_bridge(g, h, bridge_back, "bridge_back");
    const int expected = (tube.n + tube.ell) * N;
    if (bridge_out.length() != expected || bridge_back.length() != expected)
        throw ConfigError("bridges must have length (n+ell)N = " + std::to_string(expected));
    if (bridge_out.front() != g.root() || bridge_back.front() != g.root())
        throw ConfigError("bridges must start at the root");

    PolygonAssembly out;
    out.N = N;
    out.k = k;
    out.delta = compute_delta(g, rho);
    out.bridge_out = bridge_out;
    out.bridge_back = bridge_back;

    int t_minus = 0, t_plus = 0;
    out.nu_minus = build_minus(g, h, rho, k, out.delta, &t_minus);
    out.nu_plus =
        build_plus(g, h, rho, k, out.delta, bridge_out.back(), bridge_back.back(), &t_plus);
    out.t = std::max(t_minus, t_plus);

    auto rk = power_action(rho, k);
    WalkRecord back_translated = translate_walk(rk, bridge_back);

    // bridge_out, nu_plus, reversed translated bridge_back, reversed nu_minus.
    std::vector<std::pair<std::string, const std::vector<VertexId>*>> segments;
    WalkRecord back_rev = reverse_walk(back_translated);
    WalkRecord minus_rev = reverse_walk(out.nu_minus);
    std::vector<VertexId> poly = bridge_out.vertices;
    poly.insert(poly.end(), out.nu_plus.vertices.begin() + 1, out.nu_plus.vertices.end());
    poly.insert(poly.end(), back_rev.vertices.begin() + 1, back_rev.vertices.end());
    poly.insert(poly.end(), minus_rev.vertices.begin() + 1, minus_rev.vertices.end());

    out.polygon.vertices = poly;
    out.polygon.kind = WalkKind::polygon;
    std::string why;
    if (!check_closed_polygon(g, poly, &why)) {
        // Name the colliding segment pair for diagnosis.
        segments = {{"bridge_out", &bridge_out.vertices},
                    {"nu_plus", &out.nu_plus.vertices},
                    {"bridge_back", &back_translated.vertices},
                    {"nu_minus", &out.nu_minus.vertices}};
        for (std::size_t i = 0; i < segments.size(); ++i) {
            std::unordered_set<VertexId, VertexIdHash> si(segments[i].second->begin(),
                                                          segments[i].second->end());
            for (std::size_t j = i + 1; j < segments.size(); ++j) {
                int shared = 0;
                for (const auto& v : *segments[j].second) shared += si.count(v) ? 1 : 0;
                // Adjacent segments legitimately share one junction vertex;
                // the wrap-around pair shares the root.
                const int allowed = (j == i + 1 || (i == 0 && j == 3)) ? 1 : 0;
                if (shared > allowed)
                    throw ConstructionError("polygon assembly failed (" + why + "); segments " +
                                            segments[i].first + " and " + segments[j].first +
                                            " collide");
            }
        }
        throw ConstructionError("polygon assembly failed: " + why);
    }
    const int len = out.polygon.length();
    if (len != 2 * expected + out.nu_minus.length() + out.nu_plus.length())
        throw ConsistencyError("polygon length identity violated");
    (void)len;
    return out;
}

std::vector<SequenceRow> arithmetic_subsequence(const GraphModel& g, const HeightFunction& h,
                                                const TubeSpec& tube,
                                                const AutomorphismAction& rho, int k, int N_max,
                                                int materialize_cap) {
    if (N_max < 1) throw ConfigError("N_max must be >= 1");

    // Materializable bridge pool: all (n+ell)-step bridges with endpoints in
    // the root orbit (so they chain under translation).
    const int piece = tube.n + tube.ell;
    std::vector<WalkRecord> pool;
    enumerate_walks(g, &h, WalkKind::bridge, piece, [&](const WalkRecord& w) {
        if (g.translation_to(w.back())) pool.push_back(w);
        return true;
    });
    if (pool.empty()) throw ConstructionError("no chainable bridges of length n + ell");

    const Count b_n = count_bridges(g, h, tube.n).at(tube.n);
    const Count gamma_n = ball_size(g, tube.n).back();
    const double base = b_n.to_double() / gamma_n.to_double();

    std::vector<SequenceRow> rows;
    for (int N = 1; N <= N_max; ++N) {
        SequenceRow row;
        row.N = N;
        Connectors c = build_connectors(g, h, tube, rho, k, N);
        row.m_N = 2LL * piece * N + c.nu_minus.length() + c.nu_plus.length();
        row.predicted = Count(pool.size()).pow(static_cast<unsigned>(2 * N));
        row.lower_bound = std::pow(base, 2 * N);

        if (N <= materialize_cap) {
            try {
                // All N-fold chains, then all ordered (out, back) pairs.
                std::vector<WalkRecord> chains;
                std::vector<std::size_t> pick(static_cast<std::size_t>(N), 0);
                for (;;) {
                    std::vector<WalkRecord> parts;
                    for (auto i : pick) parts.push_back(pool[i]);
                    chains.push_back(concatenate_bridges(g, h, tube, parts, N));
                    int pos = N - 1;
                    while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == pool.size())
                        pick[static_cast<std::size_t>(pos--)] = 0;
                    if (pos < 0) break;
                }
                std::unordered_set<std::string> signatures;
                for (const auto& out_b : chains)
                    for (const auto& back_b : chains) {
                        PolygonAssembly pa =
                            assemble_polygon(g, h, tube, rho, k, N, out_b, back_b);
                        signatures.insert(polygon_edge_signature(pa.polygon));
                    }
                row.materialized = true;
                row.distinct_polygons = Count(signatures.size());
                if (row.distinct_polygons.to_double() < row.lower_bound)
                    throw ConsistencyError("materialized polygon count below the pigeonhole "
                                           "lower bound at N=" + std::to_string(N));
            } catch (const BudgetError&) {
                row.materialized = false;  // partial results flagged, not fatal
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace latwalk
