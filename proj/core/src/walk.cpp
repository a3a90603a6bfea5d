#include "latwalk/walk.hpp"

#include <algorithm>
#include <unordered_set>

namespace latwalk {

namespace {

bool adjacent(const GraphModel& g, const VertexId& u, const VertexId& v) {
    auto nb = g.neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

}  // namespace

bool check_saw(const GraphModel& g, const std::vector<VertexId>& w, std::string* why) {
    if (w.empty()) {
        if (why) *why = "empty walk";
        return false;
    }
    std::unordered_set<VertexId, VertexIdHash> seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!seen.insert(w[i]).second) {
            if (why) *why = "vertex revisited: " + w[i].str();
            return false;
        }
        if (i > 0 && !adjacent(g, w[i - 1], w[i])) {
            if (why) *why = "non-adjacent step " + w[i - 1].str() + " -> " + w[i].str();
            return false;
        }
    }
    return true;
}

bool check_bridge(const GraphModel& g, const std::vector<int>& heights,
                  const std::vector<VertexId>& w, std::string* why) {
    if (!check_saw(g, w, why)) return false;
    if (w.size() == 1) return true;  // zero-step bridge, vacuous condition
    const int h0 = heights.front();
    const int hn = heights.back();
    for (std::size_t m = 1; m < w.size(); ++m) {
        if (!(h0 < heights[m] && heights[m] <= hn)) {
            if (why)
                *why = "bridge condition violated at " + w[m].str() + " (h=" +
                       std::to_string(heights[m]) + ")";
            return false;
        }
    }
    return true;
}

bool check_closed_polygon(const GraphModel& g, const std::vector<VertexId>& w, std::string* why) {
    if (w.size() < 4 || w.front() != w.back()) {
        if (why) *why = "not a closed walk of length >= 3";
        return false;
    }
    std::vector<VertexId> open(w.begin(), w.end() - 1);
    if (!check_saw(g, open, why)) return false;
    if (!adjacent(g, w[w.size() - 2], w.back())) {
        if (why) *why = "closing edge missing";
        return false;
    }
    return true;
}

WalkRecord reverse_walk(const WalkRecord& w) {
    WalkRecord r = w;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

WalkRecord translate_walk(const AutomorphismAction& a, const WalkRecord& w) {
    WalkRecord r;
    r.kind = w.kind;
    r.vertices.reserve(w.vertices.size());
    for (const auto& v : w.vertices) r.vertices.push_back(a.apply(v));
    return r;
}

std::string polygon_edge_signature(const WalkRecord& w) {
    std::vector<std::string> edges;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        const VertexId& a = w.vertices[i];
        const VertexId& b = w.vertices[i + 1];
        edges.push_back(a < b ? a.str() + "-" + b.str() : b.str() + "-" + a.str());
    }
    std::sort(edges.begin(), edges.end());
    std::string sig;
    for (auto& e : edges) {
        sig += e;
        sig += '|';
    }
    return sig;
}

}  // namespace latwalk
