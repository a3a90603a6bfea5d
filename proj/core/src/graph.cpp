#include "latwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace latwalk {

namespace {

std::array<std::int32_t, 3> add(std::array<std::int32_t, 3> a, const std::array<std::int32_t, 3>& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}

std::array<std::int32_t, 3> neg(std::array<std::int32_t, 3> a) {
    for (int i = 0; i < 3; ++i) a[i] = -a[i];
    return a;
}

}  // namespace

void PeriodicSpec::finalize() {
    if (dimension < 1 || dimension > 3) throw ConfigError("lattice dimension must be 1..3");
    if (cell_count < 1) throw ConfigError("lattice needs at least one cell");
    if (root_cell < 0 || root_cell >= cell_count) throw ConfigError("root_cell out of range");
    adjacency.assign(cell_count, {});
    for (const auto& e : edges) {
        if (e.from_cell < 0 || e.from_cell >= cell_count || e.to_cell < 0 || e.to_cell >= cell_count)
            throw ConfigError("edge cell index out of range in lattice " + name);
        for (int i = dimension; i < 3; ++i)
            if (e.delta[i] != 0) throw ConfigError("edge delta exceeds lattice dimension");
        if (e.from_cell == e.to_cell && e.delta == std::array<std::int32_t, 3>{0, 0, 0})
            throw ConfigError("loops are not allowed in lattice " + name);
        adjacency[e.from_cell].push_back({e.to_cell, e.delta});
        adjacency[e.to_cell].push_back({e.from_cell, neg(e.delta)});
    }
    for (int c = 0; c < cell_count; ++c) {
        auto& half = adjacency[c];
        if (half.empty())
            throw ConfigError("cell " + std::to_string(c) + " has no incident edges in lattice " +
                              name);
        std::sort(half.begin(), half.end(), [](const HalfEdge& a, const HalfEdge& b) {
            return std::tie(a.to_cell, a.delta) < std::tie(b.to_cell, b.delta);
        });
        for (std::size_t i = 1; i < half.size(); ++i)
            if (half[i].to_cell == half[i - 1].to_cell && half[i].delta == half[i - 1].delta)
                throw ConfigError("parallel edges are not allowed in lattice " + name);
    }
}

void GraphModel::neighbors(const VertexId& v, std::vector<VertexId>& out) const {
    validate(v);
    neighbor_fn_(v, out);
}

std::vector<VertexId> GraphModel::neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    neighbors(v, out);
    return out;
}

std::optional<AutomorphismAction> GraphModel::translation_to(const VertexId& target) const {
    if (!periodic_) return std::nullopt;
    if (target.cell != root_.cell) return std::nullopt;
    std::array<std::int32_t, 3> delta{};
    for (int i = 0; i < 3; ++i) delta[i] = target.offset[i] - root_.offset[i];
    return lattice_translation(*this, delta);
}

AutomorphismAction lattice_translation(const GraphModel& g, std::array<std::int32_t, 3> delta) {
    if (!g.periodic()) throw ConfigError("lattice_translation requires a periodic graph");
    std::ostringstream nm;
    nm << "t(" << delta[0] << "," << delta[1] << "," << delta[2] << ")";
    auto shift = [delta](const VertexId& v) {
        VertexId r = v;
        r.offset = add(r.offset, delta);
        return r;
    };
    auto unshift = [delta](const VertexId& v) {
        VertexId r = v;
        r.offset = add(r.offset, neg(delta));
        return r;
    };
    return AutomorphismAction{nm.str(), shift, unshift, false};
}

AutomorphismAction identity_action() {
    auto id = [](const VertexId& v) { return v; };
    return AutomorphismAction{"id", id, id, true};
}

AutomorphismAction compose(const AutomorphismAction& outer, const AutomorphismAction& inner) {
    auto fwd = [o = outer.apply, i = inner.apply](const VertexId& v) { return o(i(v)); };
    auto bwd = [o = outer.inverse, i = inner.inverse](const VertexId& v) { return i(o(v)); };
    return AutomorphismAction{outer.name + "*" + inner.name, fwd, bwd,
                              outer.height_preserving && inner.height_preserving};
}

VertexId apply_auto_pow(const AutomorphismAction& a, const VertexId& v, int k) {
    VertexId r = v;
    if (k >= 0)
        for (int i = 0; i < k; ++i) r = a.apply(r);
    else
        for (int i = 0; i < -k; ++i) r = a.inverse(r);
    return r;
}

// ---------------------------------------------------------------------------
// Tree addressing.
//
// A vertex of T_k suspended from a ray (w_0 = root, w_1, w_2, ...) is
// addressed as (a, word): climb to ancestor w_a, then descend by `word` over
// the child alphabet '0'..'0'+b-1 with b = k-1.  The '0'-child of a ray
// vertex w_a (a >= 1) is w_{a-1}, so canonical words never start with '0'
// while a >= 1.
// ---------------------------------------------------------------------------

namespace {

VertexId tree_canonical(std::int32_t a, std::string word, std::int32_t z) {
    std::size_t cut = 0;
    while (a >= 1 && cut < word.size() && word[cut] == '0') {
        --a;
        ++cut;
    }
    return VertexId{0, {a, z, 0}, word.substr(cut)};
}

void tree_validate(const VertexId& v, int branching, bool lifted) {
    if (v.cell != 0) throw ConfigError("tree vertex has cell out of range: " + v.str());
    if (v.offset[0] < 0) throw ConfigError("tree vertex has negative ray index: " + v.str());
    if (!lifted && v.offset[1] != 0) throw ConfigError("unused offset must be zero: " + v.str());
    if (v.offset[2] != 0) throw ConfigError("unused offset must be zero: " + v.str());
    for (char c : v.word)
        if (c < '0' || c >= static_cast<char>('0' + branching))
            throw ConfigError("tree word has a letter outside the alphabet: " + v.str());
    if (v.offset[0] >= 1 && !v.word.empty() && v.word[0] == '0')
        throw ConfigError("non-reduced tree word: " + v.str());
}

void tree_neighbors(const VertexId& v, int branching, bool lifted, std::vector<VertexId>& out) {
    const std::int32_t a = v.offset[0];
    const std::int32_t z = v.offset[1];
    std::vector<VertexId> nb;
    if (v.word.empty()) {
        nb.push_back(VertexId{0, {a + 1, z, 0}, {}});
    } else {
        nb.push_back(tree_canonical(a, v.word.substr(0, v.word.size() - 1), z));
    }
    for (int c = 0; c < branching; ++c)
        nb.push_back(tree_canonical(a, v.word + static_cast<char>('0' + c), z));
    if (lifted) {
        nb.push_back(VertexId{0, {a, z - 1, 0}, v.word});
        nb.push_back(VertexId{0, {a, z + 1, 0}, v.word});
    }
    std::sort(nb.begin(), nb.end());
    out.insert(out.end(), nb.begin(), nb.end());
}

}  // namespace

AutomorphismAction tree_ray_shift(int branching, bool lifted) {
    (void)branching;
    (void)lifted;
    auto fwd = [](const VertexId& v) {
        if (v.offset[0] >= 1) {
            VertexId r = v;
            r.offset[0] -= 1;
            return r;
        }
        VertexId r = v;
        r.word = "0" + r.word;
        return r;
    };
    auto bwd = [](const VertexId& v) {
        if (v.offset[0] == 0 && !v.word.empty() && v.word[0] == '0') {
            VertexId r = v;
            r.word.erase(0, 1);
            return r;
        }
        VertexId r = v;
        r.offset[0] += 1;
        return r;
    };
    return AutomorphismAction{"ray-shift", fwd, bwd, false};
}

AutomorphismAction tree_root_swap(int branching, bool lifted) {
    (void)branching;
    (void)lifted;
    auto swap01 = [](const VertexId& v) {
        if (v.offset[0] == 0 && !v.word.empty()) {
            VertexId r = v;
            if (r.word[0] == '0')
                r.word[0] = '1';
            else if (r.word[0] == '1')
                r.word[0] = '0';
            return r;
        }
        return v;
    };
    return AutomorphismAction{"root-swap", swap01, swap01, true};
}

AutomorphismAction tz_zshift() {
    auto fwd = [](const VertexId& v) {
        VertexId r = v;
        r.offset[1] += 1;
        return r;
    };
    auto bwd = [](const VertexId& v) {
        VertexId r = v;
        r.offset[1] -= 1;
        return r;
    };
    return AutomorphismAction{"z-shift", fwd, bwd, true};
}

AutomorphismAction ladder_rung_swap() {
    auto swap = [](const VertexId& v) {
        VertexId r = v;
        r.cell = 1 - r.cell;
        return r;
    };
    return AutomorphismAction{"rung-swap", swap, swap, true};
}

// ---------------------------------------------------------------------------
// Catalog.
// ---------------------------------------------------------------------------

namespace {

GraphModel from_periodic(PeriodicSpec spec, bool bipartite) {
    spec.finalize();
    auto ps = std::make_shared<const PeriodicSpec>(std::move(spec));
    int maxdeg = 0;
    for (const auto& half : ps->adjacency) maxdeg = std::max(maxdeg, static_cast<int>(half.size()));
    VertexId root{ps->root_cell, {0, 0, 0}, {}};
    auto neighbor_fn = [ps](const VertexId& v, std::vector<VertexId>& out) {
        for (const auto& he : ps->adjacency[v.cell])
            out.push_back(VertexId{he.to_cell, add(v.offset, he.delta), {}});
    };
    auto validate_fn = [ps](const VertexId& v) {
        if (v.cell < 0 || v.cell >= ps->cell_count)
            throw ConfigError("cell index out of range: " + v.str());
        if (!v.word.empty()) throw ConfigError("lattice vertex must have an empty word: " + v.str());
        for (int i = ps->dimension; i < 3; ++i)
            if (v.offset[i] != 0) throw ConfigError("unused offset must be zero: " + v.str());
    };
    auto orbit_fn = [](const VertexId& v) { return static_cast<int>(v.cell); };
    return GraphModel(ps->name, ps->dimension, maxdeg, ps->cell_count, bipartite, root,
                      neighbor_fn, validate_fn, orbit_fn, ps);
}

GraphModel make_hypercubic(int d) {
    PeriodicSpec s;
    s.name = "Z" + std::to_string(d);
    s.dimension = d;
    s.cell_count = 1;
    s.root_cell = 0;
    for (int i = 0; i < d; ++i) {
        PeriodicEdge e;
        e.delta[i] = 1;
        s.edges.push_back(e);
    }
    return from_periodic(std::move(s), true);
}

// Hexagonal (honeycomb) lattice in the brick-wall embedding, written in the
// translation basis e1=(1,1), e2=(1,-1): cell 0 sits at x=u+v, cell 1 at
// x=u+v+1.  Each cell-0 vertex has the three cell-1 neighbors below.
GraphModel make_hex() {
    PeriodicSpec s;
    s.name = "hex";
    s.dimension = 2;
    s.cell_count = 2;
    s.root_cell = 0;
    s.edges.push_back({0, 1, {0, 0, 0}});
    s.edges.push_back({0, 1, {-1, -1, 0}});
    s.edges.push_back({0, 1, {0, -1, 0}});
    return from_periodic(std::move(s), true);
}

// Square/octagon (truncated square) lattice: a small square per unit cell,
// cells 0=W 1=N 2=S 3=E, external edges E-W horizontally and N-S vertically.
GraphModel make_sqoct() {
    PeriodicSpec s;
    s.name = "sqoct";
    s.dimension = 2;
    s.cell_count = 4;
    s.root_cell = 0;
    s.edges.push_back({0, 1, {0, 0, 0}});  // W-N
    s.edges.push_back({1, 3, {0, 0, 0}});  // N-E
    s.edges.push_back({3, 2, {0, 0, 0}});  // E-S
    s.edges.push_back({2, 0, {0, 0, 0}});  // S-W
    s.edges.push_back({3, 0, {1, 0, 0}});  // E - W of the next cell to the right
    s.edges.push_back({1, 2, {0, 1, 0}});  // N - S of the next cell above
    return from_periodic(std::move(s), true);
}

GraphModel make_ladder(int rungs) {
    PeriodicSpec s;
    s.name = "L" + std::to_string(rungs);
    s.dimension = 1;
    s.cell_count = rungs;
    s.root_cell = 0;
    for (int j = 0; j < rungs; ++j) s.edges.push_back({j, j, {1, 0, 0}});
    for (int j = 0; j + 1 < rungs; ++j) s.edges.push_back({j, j + 1, {0, 0, 0}});
    return from_periodic(std::move(s), true);
}

GraphModel make_tree(int k, bool lifted) {
    const int branching = k - 1;
    std::string nm = "T" + std::to_string(k) + (lifted ? "xZ" : "");
    auto neighbor_fn = [branching, lifted](const VertexId& v, std::vector<VertexId>& out) {
        tree_neighbors(v, branching, lifted, out);
    };
    auto validate_fn = [branching, lifted](const VertexId& v) {
        tree_validate(v, branching, lifted);
    };
    auto orbit_fn = [](const VertexId&) { return 0; };  // end stabilizer acts transitively
    VertexId root{0, {0, 0, 0}, {}};
    return GraphModel(nm, 0, k + (lifted ? 2 : 0), 1, true, root, neighbor_fn, validate_fn,
                      orbit_fn);
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"Z1", "Z2", "Z3", "hex", "sqoct", "L2", "L3", "T3", "T4", "T3xZ"};
}

bool is_catalog_graph(const std::string& name) {
    auto names = catalog_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

GraphModel make_graph(const std::string& name) {
    if (name == "Z1") return make_hypercubic(1);
    if (name == "Z2") return make_hypercubic(2);
    if (name == "Z3") return make_hypercubic(3);
    if (name == "hex") return make_hex();
    if (name == "sqoct") return make_sqoct();
    if (name == "L2") return make_ladder(2);
    if (name == "L3") return make_ladder(3);
    if (name == "T3") return make_tree(3, false);
    if (name == "T4") return make_tree(4, false);
    if (name == "T3xZ") return make_tree(3, true);
    throw ConfigError("unknown graph: " + name);
}

GraphModel load_lattice_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("lattice file is not valid JSON: ") + e.what());
    }
    PeriodicSpec s;
    try {
        s.name = j.at("name").get<std::string>();
        s.dimension = j.at("dimension").get<int>();
        if (j.at("cells").is_number())
            s.cell_count = j.at("cells").get<int>();
        else
            s.cell_count = static_cast<int>(j.at("cells").size());
        s.root_cell = j.at("root_cell").get<int>();
        for (const auto& je : j.at("edges")) {
            PeriodicEdge e;
            e.from_cell = je.at("from_cell").get<int>();
            e.to_cell = je.at("to_cell").get<int>();
            auto d = je.at("offset_delta");
            if (static_cast<int>(d.size()) != s.dimension)
                throw ConfigError("offset_delta length must equal dimension");
            for (int i = 0; i < s.dimension; ++i) e.delta[i] = d.at(i).get<std::int32_t>();
            s.edges.push_back(e);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad lattice description: ") + e.what());
    }
    // Bipartiteness of a user lattice is not assumed.
    return from_periodic(std::move(s), false);
}

GraphModel load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open lattice file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_lattice_json(ss.str());
}

// ---------------------------------------------------------------------------
// Distances and balls.
// ---------------------------------------------------------------------------

int graph_distance(const GraphModel& g, const VertexId& u, const VertexId& v, int cap) {
    if (cap < 0) throw ConfigError("distance cap must be nonnegative");
    g.validate(u);
    g.validate(v);
    if (u == v) return 0;
    std::unordered_set<VertexId, VertexIdHash> seen{u};
    std::deque<std::pair<VertexId, int>> queue{{u, 0}};
    std::vector<VertexId> nb;
    while (!queue.empty()) {
        auto [cur, dist] = std::move(queue.front());
        queue.pop_front();
        if (dist == cap) continue;
        nb.clear();
        g.neighbors(cur, nb);
        for (const auto& w : nb) {
            if (w == v) return dist + 1;
            if (seen.insert(w).second) queue.emplace_back(w, dist + 1);
        }
    }
    return -1;
}

std::vector<VertexId> ball_vertices_around(const GraphModel& g, const VertexId& center, int n) {
    if (n < 0) throw ConfigError("ball radius must be nonnegative");
    g.validate(center);
    std::vector<VertexId> order{center};
    std::unordered_set<VertexId, VertexIdHash> seen{center};
    std::size_t frontier_begin = 0;
    std::vector<VertexId> nb;
    for (int depth = 0; depth < n; ++depth) {
        std::size_t frontier_end = order.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            nb.clear();
            g.neighbors(order[i], nb);
            for (const auto& w : nb)
                if (seen.insert(w).second) order.push_back(w);
        }
        frontier_begin = frontier_end;
    }
    return order;
}

std::vector<VertexId> ball_vertices(const GraphModel& g, int n) {
    return ball_vertices_around(g, g.root(), n);
}

std::vector<Count> ball_size(const GraphModel& g, int n) {
    if (n < 0) throw ConfigError("ball radius must be nonnegative");
    std::vector<Count> gamma;
    std::unordered_set<VertexId, VertexIdHash> seen{g.root()};
    std::vector<VertexId> frontier{g.root()};
    Count total(1);
    gamma.push_back(total);
    std::vector<VertexId> next, nb;
    for (int depth = 1; depth <= n; ++depth) {
        next.clear();
        for (const auto& v : frontier) {
            nb.clear();
            g.neighbors(v, nb);
            for (const auto& w : nb)
                if (seen.insert(w).second) next.push_back(w);
        }
        total += Count(next.size());
        gamma.push_back(total);
        frontier.swap(next);
    }
    return gamma;
}

}  // namespace latwalk
