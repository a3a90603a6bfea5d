#ifndef LATWALK_ENUMERATE_HPP
#define LATWALK_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"
#include "latwalk/walk.hpp"

namespace latwalk {

enum class Quantity { saw, polygon, bridge, saw_to_neighbor, ball };
const char* quantity_name(Quantity q);

/// Exact per-length counts of one quantity on one graph.
struct CountSeries {
    Quantity quantity = Quantity::saw;
    std::string graph;
    std::string height_label;  // empty when the quantity has no height
    std::vector<Count> counts;  // index = walk length n

    int max_n() const { return static_cast<int>(counts.size()) - 1; }
    const Count& at(int n) const { return counts.at(static_cast<std::size_t>(n)); }
};

struct EnumOptions {
    int workers = 1;
    std::uint64_t node_budget = 0;  // visited search-tree nodes; 0 = unlimited
    int split_depth = 3;            // prefix depth at which the walk tree is split
    std::optional<VertexId> start;  // defaults to the graph root
};

/// c_n: n-step SAWs from the root, 0 <= n <= n_max.
CountSeries count_saws(const GraphModel& g, int n_max, const EnumOptions& opts = {});

/// c_n(d1): n-step SAWs whose final vertex is a neighbor of the root.
/// counts[0] = 0 by convention; requires n_max >= 1.
CountSeries count_saws_to_neighbor(const GraphModel& g, int n_max, const EnumOptions& opts = {});

/// p_n = c_{n-1}(d1) / 2 for 3 <= n <= n_max: unoriented, unbased cycles
/// through the root.  counts[0..2] = 0; requires n_max >= 3.
CountSeries count_polygons(const GraphModel& g, int n_max, const EnumOptions& opts = {});

/// Independent cross-check: direct enumeration of cycles through the root in
/// a canonical orientation (no division by 2).
CountSeries count_polygons_direct(const GraphModel& g, int n_max, const EnumOptions& opts = {});

/// b_n: n-step h-bridges from the root; b_0 = 1 by the vacuous condition.
CountSeries count_bridges(const GraphModel& g, const HeightFunction& h, int n_max,
                          const EnumOptions& opts = {});

/// Exact count of n-step bridges grouped by final vertex.  The maximum entry
/// is checked against the pigeonhole bound b_n / Gamma_n.
std::map<VertexId, Count> bridge_endpoint_census(const GraphModel& g, const HeightFunction& h,
                                                 int n, const EnumOptions& opts = {});

/// Distribution of d(root, endpoint) over all n-step SAWs; total mass = c_n.
std::map<int, Count> endpoint_distance_histogram(const GraphModel& g, int n,
                                                 const EnumOptions& opts = {});

/// Streams every walk of the given kind and exact length n in deterministic
/// (canonical DFS) order.  Return false from the visitor to stop early.
/// `h` is required for bridges and ignored otherwise.
using WalkVisitor = std::function<bool(const WalkRecord&)>;
void enumerate_walks(const GraphModel& g, const HeightFunction* h, WalkKind kind, int n,
                     const WalkVisitor& visitor, const EnumOptions& opts = {});

}  // namespace latwalk

#endif
