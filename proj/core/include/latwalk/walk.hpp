#ifndef LATWALK_WALK_HPP
#define LATWALK_WALK_HPP

#include <string>
#include <vector>

#include "latwalk/graph.hpp"

namespace latwalk {

enum class WalkKind { saw, bridge, polygon };

/// A concrete walk as a vertex sequence.  Polygons are stored closed
/// (first == last).
struct WalkRecord {
    std::vector<VertexId> vertices;
    WalkKind kind = WalkKind::saw;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    const VertexId& front() const { return vertices.front(); }
    const VertexId& back() const { return vertices.back(); }
};

/// Checks consecutive adjacency and vertex distinctness.  On failure returns
/// false and, if `why` is non-null, stores a witness description.
bool check_saw(const GraphModel& g, const std::vector<VertexId>& w, std::string* why = nullptr);

/// Bridge property relative to heights: h(v0) < h(vm) <= h(vn) for 0 < m <= n.
bool check_bridge(const GraphModel& g, const std::vector<int>& heights,
                  const std::vector<VertexId>& w, std::string* why = nullptr);

/// Closed self-avoiding polygon: first == last, length >= 3, interior distinct.
bool check_closed_polygon(const GraphModel& g, const std::vector<VertexId>& w,
                          std::string* why = nullptr);

WalkRecord reverse_walk(const WalkRecord& w);
WalkRecord translate_walk(const AutomorphismAction& a, const WalkRecord& w);

/// Canonical fingerprint of a polygon as its sorted set of undirected edges;
/// equal iff the polygons have the same edge set.
std::string polygon_edge_signature(const WalkRecord& w);

}  // namespace latwalk

#endif
