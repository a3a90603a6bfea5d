#ifndef LATWALK_TESTS_ORACLE_HPP
#define LATWALK_TESTS_ORACLE_HPP

// Deliberately naive recursive reference counters, written independently of
// the optimized engine: plain vector paths, linear-scan self-avoidance, no
// pruning beyond the definitions.  Slow on purpose; keep n small.

#include <algorithm>
#include <vector>

#include "latwalk/common.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"

namespace latwalk_tests {

using latwalk::Count;
using latwalk::GraphModel;
using latwalk::HeightFunction;
using latwalk::VertexId;

inline bool on_path(const std::vector<VertexId>& path, const VertexId& v) {
    return std::find(path.begin(), path.end(), v) != path.end();
}

inline void saw_rec(const GraphModel& g, std::vector<VertexId>& path, int n,
                    std::vector<Count>& out) {
    out[path.size() - 1] += Count(1);
    if (static_cast<int>(path.size()) > n) return;
    for (const auto& u : g.neighbors(path.back())) {
        if (on_path(path, u)) continue;
        path.push_back(u);
        saw_rec(g, path, n, out);
        path.pop_back();
    }
}

/// c_0..c_n by brute force.
inline std::vector<Count> oracle_saws(const GraphModel& g, int n) {
    std::vector<Count> out(static_cast<std::size_t>(n) + 1);
    std::vector<VertexId> path{g.root()};
    saw_rec(g, path, n, out);
    return out;
}

/// c_n(d1): SAWs of each length ending at a neighbor of the root.
inline std::vector<Count> oracle_saws_to_neighbor(const GraphModel& g, int n) {
    std::vector<Count> out(static_cast<std::size_t>(n) + 1);
    const std::vector<VertexId> root_nb = g.neighbors(g.root());
    std::vector<VertexId> path{g.root()};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth > 0 && on_path(root_nb, path.back()))
            out[static_cast<std::size_t>(depth)] += Count(1);
        if (depth == n) return;
        for (const auto& u : g.neighbors(path.back())) {
            if (on_path(path, u)) continue;
            path.push_back(u);
            self(self, depth + 1);
            path.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// p_n: unoriented unbased root cycles, as half the count of (n-1)-step SAWs
/// ending at a root neighbor (each cycle has two traversal directions).
inline std::vector<Count> oracle_polygons(const GraphModel& g, int n) {
    auto nb = oracle_saws_to_neighbor(g, n >= 1 ? n - 1 : 0);
    std::vector<Count> out(static_cast<std::size_t>(n) + 1);
    for (int m = 3; m <= n; ++m) {
        const Count& c = nb[static_cast<std::size_t>(m) - 1];
        if (!c.is_even()) throw std::logic_error("oracle: odd neighbor-ending count");
        out[static_cast<std::size_t>(m)] = c.half();
    }
    return out;
}

/// b_n: SAWs with h(v_0) < h(v_m) <= h(v_n) for all 0 < m <= n; b_0 = 1.
inline std::vector<Count> oracle_bridges(const GraphModel& g, const HeightFunction& h, int n) {
    std::vector<Count> out(static_cast<std::size_t>(n) + 1);
    std::vector<VertexId> path{g.root()};
    const int h0 = h.evaluate(g.root());
    auto rec = [&](auto&& self, int hmax) -> void {
        const int depth = static_cast<int>(path.size()) - 1;
        if (depth == 0 || h.evaluate(path.back()) >= hmax)
            out[static_cast<std::size_t>(depth)] += Count(1);
        if (depth == n) return;
        for (const auto& u : g.neighbors(path.back())) {
            if (on_path(path, u)) continue;
            const int hu = h.evaluate(u);
            if (hu <= h0) continue;
            path.push_back(u);
            self(self, std::max(hmax, hu));
            path.pop_back();
        }
    };
    rec(rec, h0);
    return out;
}

}  // namespace latwalk_tests

#endif
