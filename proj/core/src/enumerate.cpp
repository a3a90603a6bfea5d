#include "latwalk/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace latwalk {

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::saw: return "saw";
        case Quantity::polygon: return "polygon";
        case Quantity::bridge: return "bridge";
        case Quantity::saw_to_neighbor: return "saw_to_neighbor";
        case Quantity::ball: return "ball";
    }
    return "?";
}

namespace {

enum class Mode { saw, to_neighbor, bridge, census, histogram, polygon_direct };

/// Per-task accumulation target.  Sums of nonnegative integers are exact and
/// associative, so any merge order yields identical results.
struct Tally {
    std::vector<std::uint64_t> depth_counts;
    std::unordered_map<std::int64_t, std::uint64_t> keyed;  // packed endpoint / distance
    std::map<VertexId, std::uint64_t> by_vertex;            // generic census

    void merge(const Tally& o) {
        for (std::size_t i = 0; i < o.depth_counts.size(); ++i) depth_counts[i] += o.depth_counts[i];
        for (const auto& [k, v] : o.keyed) keyed[k] += v;
        for (const auto& [k, v] : o.by_vertex) by_vertex[k] += v;
    }
};

/// Shared node budget, charged in chunks to keep the atomic cold.
struct BudgetGuard {
    std::atomic<std::int64_t>* remaining = nullptr;  // null = unlimited
    std::int64_t local = 0;

    void tick() {
        if (remaining && ++local >= 4096) charge();
    }
    void charge() {
        if (!remaining || local == 0) return;
        if (remaining->fetch_sub(local) - local < 0)
            throw BudgetError("node budget exhausted during enumeration");
        local = 0;
    }
};

void validate_options(const EnumOptions& opts) {
    if (opts.workers < 1) throw ConfigError("workers must be >= 1");
    if (opts.split_depth < 1) throw ConfigError("split_depth must be >= 1");
}

// ---------------------------------------------------------------------------
// Packed engine: periodic lattices (and affine heights) on a bounded box of
// byte flags with precomputed per-half-edge index and height deltas.
// ---------------------------------------------------------------------------

struct PackedMove {
    std::int64_t didx;
    std::int32_t to_cell;
    std::int32_t dh;
};

struct PackedGraph {
    int dim = 1;
    int ncells = 1;
    int side = 1;
    int B = 0;
    std::int64_t nslots = 0;
    std::vector<std::vector<PackedMove>> moves;  // per cell
    VertexId start;
    std::int64_t start_idx = 0;
    int h_start = 0;
    std::vector<std::int64_t> start_nb;   // packed neighbors of start
    std::vector<std::int32_t> dist;       // BFS distance from start (histogram only)

    std::int64_t pack(const VertexId& v) const {
        std::int64_t lin = 0;
        for (int i = dim - 1; i >= 0; --i) lin = lin * side + (v.offset[i] - start.offset[i] + B);
        return v.cell + static_cast<std::int64_t>(ncells) * lin;
    }
    VertexId unpack(std::int64_t idx) const {
        VertexId v;
        v.cell = static_cast<std::int32_t>(idx % ncells);
        std::int64_t lin = idx / ncells;
        for (int i = 0; i < dim; ++i) {
            v.offset[i] = static_cast<std::int32_t>(lin % side) - B + start.offset[i];
            lin /= side;
        }
        return v;
    }
};

std::optional<PackedGraph> make_packed(const GraphModel& g, const HeightFunction* h, int n,
                                       const VertexId& start, bool need_dist) {
    const PeriodicSpec* spec = g.periodic();
    if (!spec) return std::nullopt;
    if (h && !h->affine) return std::nullopt;

    PackedGraph pg;
    pg.dim = spec->dimension;
    pg.ncells = spec->cell_count;
    int maxstep = 1;
    for (const auto& e : spec->edges)
        for (int i = 0; i < 3; ++i) maxstep = std::max(maxstep, std::abs(static_cast<int>(e.delta[i])));
    pg.B = n * maxstep + 1;
    pg.side = 2 * pg.B + 1;
    std::int64_t slots = pg.ncells;
    for (int i = 0; i < pg.dim; ++i) {
        slots *= pg.side;
        if (slots > (std::int64_t{1} << 28)) return std::nullopt;  // box too large; go generic
    }
    pg.nslots = slots;

    const std::int64_t s0 = 1, s1 = pg.side, s2 = static_cast<std::int64_t>(pg.side) * pg.side;
    pg.moves.resize(pg.ncells);
    for (int c = 0; c < pg.ncells; ++c) {
        for (const auto& he : spec->adjacency[c]) {
            PackedMove m;
            m.to_cell = he.to_cell;
            m.didx = (he.to_cell - c) +
                     static_cast<std::int64_t>(pg.ncells) *
                         (he.delta[0] * s0 + he.delta[1] * s1 + he.delta[2] * s2);
            m.dh = 0;
            if (h) {
                const auto& a = *h->affine;
                m.dh = a.coeff[0] * he.delta[0] + a.coeff[1] * he.delta[1] +
                       a.coeff[2] * he.delta[2] + a.corr[he.to_cell] - a.corr[c];
            }
            pg.moves[c].push_back(m);
        }
    }
    pg.start = start;
    pg.start_idx = pg.pack(start);
    pg.h_start = h ? h->evaluate(start) : 0;
    for (const auto& u : g.neighbors(start)) pg.start_nb.push_back(pg.pack(u));

    if (need_dist) {
        pg.dist.assign(static_cast<std::size_t>(pg.nslots), -1);
        pg.dist[static_cast<std::size_t>(pg.start_idx)] = 0;
        std::deque<std::pair<std::int64_t, int>> queue{{pg.start_idx, pg.start.cell}};
        while (!queue.empty()) {
            auto [idx, cell] = queue.front();
            queue.pop_front();
            const int d = pg.dist[static_cast<std::size_t>(idx)];
            if (d == n) continue;
            for (const auto& m : pg.moves[cell]) {
                std::int64_t j = idx + m.didx;
                if (pg.dist[static_cast<std::size_t>(j)] < 0) {
                    pg.dist[static_cast<std::size_t>(j)] = d + 1;
                    queue.emplace_back(j, m.to_cell);
                }
            }
        }
    }
    return pg;
}

struct PackedFrontier {
    std::vector<std::int64_t> path;
    int cell;
    int h;
    int hmax;
};

template <Mode M>
void packed_dfs(const PackedGraph& pg, std::uint8_t* visited, int n, std::int64_t idx, int cell,
                int depth, int hcur, int hmax, Tally& t, BudgetGuard& bg, int collect_depth,
                std::vector<PackedFrontier>* out, std::vector<std::int64_t>* path) {
    for (const PackedMove& m : pg.moves[cell]) {
        const std::int64_t j = idx + m.didx;
        if (visited[j]) continue;
        const int hj = hcur + m.dh;
        if constexpr (M == Mode::bridge || M == Mode::census)
            if (hj <= pg.h_start) continue;
        bg.tick();
        const int d1 = depth + 1;
        if constexpr (M == Mode::saw) {
            ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::to_neighbor) {
            if (std::find(pg.start_nb.begin(), pg.start_nb.end(), j) != pg.start_nb.end())
                ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::bridge) {
            if (hj >= hmax) ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::census) {
            if (d1 == n && hj >= hmax) ++t.keyed[j];
        } else if constexpr (M == Mode::histogram) {
            if (d1 == n) ++t.keyed[pg.dist[static_cast<std::size_t>(j)]];
        }
        if (d1 == n) continue;
        const int hmax1 = hj > hmax ? hj : hmax;
        visited[j] = 1;
        if (path) path->push_back(j);
        if (d1 == collect_depth)
            out->push_back({*path, m.to_cell, hj, hmax1});
        else
            packed_dfs<M>(pg, visited, n, j, m.to_cell, d1, hj, hmax1, t, bg, collect_depth, out,
                          path);
        if (path) path->pop_back();
        visited[j] = 0;
    }
}

template <Mode M>
Tally run_packed(const PackedGraph& pg, int n, const EnumOptions& opts) {
    Tally total;
    total.depth_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    if constexpr (M == Mode::saw || M == Mode::bridge) total.depth_counts[0] = 1;
    if constexpr (M == Mode::histogram)
        if (n == 0) ++total.keyed[0];
    if (n == 0) return total;

    std::atomic<std::int64_t> remaining{static_cast<std::int64_t>(opts.node_budget)};
    std::atomic<std::int64_t>* rem = opts.node_budget ? &remaining : nullptr;

    std::vector<std::uint8_t> visited(static_cast<std::size_t>(pg.nslots), 0);
    visited[static_cast<std::size_t>(pg.start_idx)] = 1;

    const int s = std::min(opts.split_depth, n);
    std::vector<PackedFrontier> frontier;
    std::vector<std::int64_t> path{pg.start_idx};
    BudgetGuard bg{rem, 0};
    packed_dfs<M>(pg, visited.data(), n, pg.start_idx, pg.start.cell, 0, pg.h_start, pg.h_start,
                  total, bg, s, &frontier, &path);
    bg.charge();

    const int workers = std::min<int>(opts.workers, std::max<std::size_t>(frontier.size(), 1));
    std::vector<Tally> parts(static_cast<std::size_t>(workers));
    for (auto& p : parts) p.depth_counts.assign(static_cast<std::size_t>(n) + 1, 0);

    auto work = [&](int w) {
        static std::atomic<std::size_t> dummy;  // silence unused warnings on some libstdc++
        (void)dummy;
        std::vector<std::uint8_t> vis(static_cast<std::size_t>(pg.nslots), 0);
        BudgetGuard wb{rem, 0};
        for (std::size_t i = static_cast<std::size_t>(w); i < frontier.size();
             i += static_cast<std::size_t>(workers)) {
            const PackedFrontier& f = frontier[i];
            for (auto idx : f.path) vis[static_cast<std::size_t>(idx)] = 1;
            packed_dfs<M>(pg, vis.data(), n, f.path.back(), f.cell, s, f.h, f.hmax,
                          parts[static_cast<std::size_t>(w)], wb, -1, nullptr, nullptr);
            for (auto idx : f.path) vis[static_cast<std::size_t>(idx)] = 0;
        }
        wb.charge();
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (const auto& p : parts) total.merge(p);
    return total;
}

// ---------------------------------------------------------------------------
// Generic engine: any graph (trees, user lattices, non-affine heights) via
// hashed visited sets.
// ---------------------------------------------------------------------------

struct GenericCtx {
    const GraphModel* g;
    const HeightFunction* h;
    VertexId start;
    int h_start = 0;
    std::vector<VertexId> start_nb;  // canonical order
    std::unordered_map<VertexId, int, VertexIdHash> dist;  // histogram only

    bool near_start(const VertexId& v) const {
        return std::binary_search(start_nb.begin(), start_nb.end(), v);
    }
};

struct GenericFrontier {
    std::vector<VertexId> path;
    int h;
    int hmax;
};

template <Mode M>
void generic_dfs(const GenericCtx& ctx, int n,
                 std::unordered_set<VertexId, VertexIdHash>& visited, std::vector<VertexId>& path,
                 int hcur, int hmax, Tally& t, BudgetGuard& bg, int collect_depth,
                 std::vector<GenericFrontier>* out) {
    std::vector<VertexId> nb;
    ctx.g->neighbors(path.back(), nb);
    const int depth = static_cast<int>(path.size()) - 1;
    for (const auto& u : nb) {
        if (visited.count(u)) continue;
        const int hj = ctx.h ? ctx.h->evaluate(u) : 0;
        if constexpr (M == Mode::bridge || M == Mode::census)
            if (hj <= ctx.h_start) continue;
        bg.tick();
        const int d1 = depth + 1;
        if constexpr (M == Mode::saw) {
            ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::to_neighbor) {
            if (ctx.near_start(u)) ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::bridge) {
            if (hj >= hmax) ++t.depth_counts[static_cast<std::size_t>(d1)];
        } else if constexpr (M == Mode::census) {
            if (d1 == n && hj >= hmax) ++t.by_vertex[u];
        } else if constexpr (M == Mode::histogram) {
            if (d1 == n) ++t.keyed[ctx.dist.at(u)];
        } else if constexpr (M == Mode::polygon_direct) {
            // Close a cycle in canonical orientation: second vertex < last.
            if (d1 >= 2 && ctx.near_start(u) && path[1] < u)
                ++t.depth_counts[static_cast<std::size_t>(d1) + 1];
        }
        if (d1 == n) continue;
        const int hmax1 = hj > hmax ? hj : hmax;
        visited.insert(u);
        path.push_back(u);
        if (d1 == collect_depth)
            out->push_back({path, hj, hmax1});
        else
            generic_dfs<M>(ctx, n, visited, path, hj, hmax1, t, bg, collect_depth, out);
        path.pop_back();
        visited.erase(u);
    }
}

template <Mode M>
Tally run_generic(const GenericCtx& ctx, int n, int tally_size, const EnumOptions& opts) {
    Tally total;
    total.depth_counts.assign(static_cast<std::size_t>(tally_size), 0);
    if constexpr (M == Mode::saw || M == Mode::bridge) total.depth_counts[0] = 1;
    if constexpr (M == Mode::histogram)
        if (n == 0) ++total.keyed[0];
    if (n == 0) return total;

    std::atomic<std::int64_t> remaining{static_cast<std::int64_t>(opts.node_budget)};
    std::atomic<std::int64_t>* rem = opts.node_budget ? &remaining : nullptr;

    std::unordered_set<VertexId, VertexIdHash> visited{ctx.start};
    std::vector<VertexId> path{ctx.start};
    const int s = std::min(opts.split_depth, n);
    std::vector<GenericFrontier> frontier;
    BudgetGuard bg{rem, 0};
    generic_dfs<M>(ctx, n, visited, path, ctx.h_start, ctx.h_start, total, bg, s, &frontier);
    bg.charge();

    const int workers = std::min<int>(opts.workers, std::max<std::size_t>(frontier.size(), 1));
    std::vector<Tally> parts(static_cast<std::size_t>(workers));
    for (auto& p : parts) p.depth_counts.assign(static_cast<std::size_t>(tally_size), 0);

    auto work = [&](int w) {
        BudgetGuard wb{rem, 0};
        for (std::size_t i = static_cast<std::size_t>(w); i < frontier.size();
             i += static_cast<std::size_t>(workers)) {
            GenericFrontier f = frontier[i];
            std::unordered_set<VertexId, VertexIdHash> vis(f.path.begin(), f.path.end());
            generic_dfs<M>(ctx, n, vis, f.path, f.h, f.hmax, parts[static_cast<std::size_t>(w)],
                           wb, -1, nullptr);
        }
        wb.charge();
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (const auto& p : parts) total.merge(p);
    return total;
}

GenericCtx make_generic_ctx(const GraphModel& g, const HeightFunction* h, const VertexId& start,
                            int n, bool need_dist) {
    GenericCtx ctx;
    ctx.g = &g;
    ctx.h = h;
    ctx.start = start;
    ctx.h_start = h ? h->evaluate(start) : 0;
    ctx.start_nb = g.neighbors(start);  // already canonically sorted
    if (need_dist) {
        ctx.dist[start] = 0;
        std::deque<VertexId> queue{start};
        std::vector<VertexId> nb;
        while (!queue.empty()) {
            VertexId cur = std::move(queue.front());
            queue.pop_front();
            const int d = ctx.dist.at(cur);
            if (d == n) continue;
            nb.clear();
            g.neighbors(cur, nb);
            for (const auto& u : nb)
                if (ctx.dist.emplace(u, d + 1).second) queue.push_back(u);
        }
    }
    return ctx;
}

/// Dispatch to the packed engine when possible, else the generic one.
template <Mode M>
Tally run_enum(const GraphModel& g, const HeightFunction* h, int n, const EnumOptions& opts,
               bool allow_packed = true) {
    validate_options(opts);
    const VertexId start = opts.start.value_or(g.root());
    g.validate(start);
    constexpr bool need_dist = (M == Mode::histogram);
    if (allow_packed) {
        if (auto pg = make_packed(g, h, n, start, need_dist)) {
            Tally t = run_packed<M>(*pg, n, opts);
            if constexpr (M == Mode::census) {
                // Re-key census entries from packed indices to vertex ids.
                for (const auto& [k, v] : t.keyed) t.by_vertex[pg->unpack(k)] += v;
                t.keyed.clear();
            }
            return t;
        }
    }
    GenericCtx ctx = make_generic_ctx(g, h, start, n, need_dist);
    const int tally_size = (M == Mode::polygon_direct) ? n + 2 : n + 1;
    return run_generic<M>(ctx, n, tally_size, opts);
}

std::vector<Count> to_counts(const std::vector<std::uint64_t>& raw, int n_max) {
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int i = 0; i <= n_max; ++i)
        out.emplace_back(i < static_cast<int>(raw.size()) ? raw[static_cast<std::size_t>(i)] : 0);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public counters.
// ---------------------------------------------------------------------------

CountSeries count_saws(const GraphModel& g, int n_max, const EnumOptions& opts) {
    if (n_max < 0) throw ConfigError("n_max must be >= 0");
    Tally t = run_enum<Mode::saw>(g, nullptr, n_max, opts);
    return CountSeries{Quantity::saw, g.name, "", to_counts(t.depth_counts, n_max)};
}

CountSeries count_saws_to_neighbor(const GraphModel& g, int n_max, const EnumOptions& opts) {
    if (n_max < 1) throw ConfigError("n_max must be >= 1");
    Tally t = run_enum<Mode::to_neighbor>(g, nullptr, n_max, opts);
    return CountSeries{Quantity::saw_to_neighbor, g.name, "", to_counts(t.depth_counts, n_max)};
}

CountSeries count_polygons(const GraphModel& g, int n_max, const EnumOptions& opts) {
    if (n_max < 3) throw ConfigError("n_max must be >= 3 for polygons");
    CountSeries nbr = count_saws_to_neighbor(g, n_max - 1, opts);
    CountSeries out{Quantity::polygon, g.name, "", std::vector<Count>(static_cast<std::size_t>(n_max) + 1)};
    for (int n = 3; n <= n_max; ++n) {
        const Count& c = nbr.at(n - 1);
        if (!c.is_even())
            throw ConsistencyError("odd neighbor-ending SAW count at n=" + std::to_string(n - 1) +
                                   ": " + c.str());
        out.counts[static_cast<std::size_t>(n)] = c.half();
    }
    return out;
}

CountSeries count_polygons_direct(const GraphModel& g, int n_max, const EnumOptions& opts) {
    if (n_max < 3) throw ConfigError("n_max must be >= 3 for polygons");
    Tally t = run_enum<Mode::polygon_direct>(g, nullptr, n_max - 1, opts, /*allow_packed=*/false);
    return CountSeries{Quantity::polygon, g.name, "", to_counts(t.depth_counts, n_max)};
}

CountSeries count_bridges(const GraphModel& g, const HeightFunction& h, int n_max,
                          const EnumOptions& opts) {
    if (n_max < 0) throw ConfigError("n_max must be >= 0");
    Tally t = run_enum<Mode::bridge>(g, &h, n_max, opts);
    return CountSeries{Quantity::bridge, g.name, h.label, to_counts(t.depth_counts, n_max)};
}

std::map<VertexId, Count> bridge_endpoint_census(const GraphModel& g, const HeightFunction& h,
                                                 int n, const EnumOptions& opts) {
    if (n < 1) throw ConfigError("census length must be >= 1");
    Tally t = run_enum<Mode::census>(g, &h, n, opts);
    std::map<VertexId, Count> out;
    Count total, maxc;
    for (const auto& [v, c] : t.by_vertex) {
        out[v] = Count(c);
        total += Count(c);
        if (Count(c) > maxc) maxc = Count(c);
    }
    // Pigeonhole: the best endpoint collects at least b_n / Gamma_n bridges.
    if (!total.is_zero()) {
        const Count gamma = ball_size(g, n).back();
        if (maxc * gamma < total)
            throw ConsistencyError("census maximum below the pigeonhole bound at n=" +
                                   std::to_string(n));
    }
    return out;
}

std::map<int, Count> endpoint_distance_histogram(const GraphModel& g, int n,
                                                 const EnumOptions& opts) {
    if (n < 1) throw ConfigError("histogram length must be >= 1");
    Tally t = run_enum<Mode::histogram>(g, nullptr, n, opts);
    std::map<int, Count> out;
    for (const auto& [d, c] : t.keyed) out[static_cast<int>(d)] += Count(c);
    return out;
}

// ---------------------------------------------------------------------------
// Walk streaming (sequential, canonical order).
// ---------------------------------------------------------------------------

namespace {

struct StreamState {
    const GraphModel& g;
    const HeightFunction* h;
    WalkKind kind;
    int n;
    const WalkVisitor& visitor;
    std::vector<VertexId> path;
    std::vector<int> heights;
    std::unordered_set<VertexId, VertexIdHash> visited;
    std::vector<VertexId> start_nb;
    bool stopped = false;

    void emit(std::vector<VertexId> vertices) {
        WalkRecord rec;
        rec.vertices = std::move(vertices);
        rec.kind = kind;
        if (!visitor(rec)) stopped = true;
    }

    void dfs() {
        if (stopped) return;
        const int depth = static_cast<int>(path.size()) - 1;
        std::vector<VertexId> nb;
        g.neighbors(path.back(), nb);
        for (const auto& u : nb) {
            if (stopped) return;
            if (visited.count(u)) continue;
            const int hj = h ? h->evaluate(u) : 0;
            if (kind == WalkKind::bridge && hj <= heights.front()) continue;
            const int d1 = depth + 1;
            if (kind == WalkKind::saw && d1 == n) {
                auto w = path;
                w.push_back(u);
                emit(std::move(w));
            } else if (kind == WalkKind::bridge && d1 == n) {
                if (hj >= *std::max_element(heights.begin(), heights.end())) {
                    auto w = path;
                    w.push_back(u);
                    emit(std::move(w));
                }
            } else if (kind == WalkKind::polygon && d1 == n - 1) {
                if (d1 >= 2 && std::binary_search(start_nb.begin(), start_nb.end(), u) &&
                    path[1] < u) {
                    auto w = path;
                    w.push_back(u);
                    w.push_back(path.front());
                    emit(std::move(w));
                }
            }
            if (stopped) return;
            const int limit = (kind == WalkKind::polygon) ? n - 1 : n;
            if (d1 >= limit) continue;
            visited.insert(u);
            path.push_back(u);
            heights.push_back(hj);
            dfs();
            heights.pop_back();
            path.pop_back();
            visited.erase(u);
        }
    }
};

}  // namespace

void enumerate_walks(const GraphModel& g, const HeightFunction* h, WalkKind kind, int n,
                     const WalkVisitor& visitor, const EnumOptions& opts) {
    if (n < 1) throw ConfigError("walk length must be >= 1");
    if (kind == WalkKind::bridge && !h) throw ConfigError("bridge streaming requires a height");
    if (kind == WalkKind::polygon && n < 3) return;  // no polygons shorter than 3
    const VertexId start = opts.start.value_or(g.root());
    g.validate(start);
    StreamState st{g,
                   kind == WalkKind::bridge ? h : nullptr,
                   kind,
                   n,
                   visitor,
                   {start},
                   {kind == WalkKind::bridge ? h->evaluate(start) : 0},
                   {start},
                   g.neighbors(start),
                   false};
    st.dfs();
}

}  // namespace latwalk
