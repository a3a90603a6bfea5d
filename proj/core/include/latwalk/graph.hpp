#ifndef LATWALK_GRAPH_HPP
#define LATWALK_GRAPH_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latwalk/vertex.hpp"

namespace latwalk {

/// One undirected edge class of a periodic lattice, listed once; the reverse
/// direction is implied.
struct PeriodicEdge {
    int from_cell = 0;
    int to_cell = 0;
    std::array<std::int32_t, 3> delta{0, 0, 0};
};

/// Description of a periodic lattice: a finite set of cells per unit
/// translation cell, plus translated edge classes.
struct PeriodicSpec {
    std::string name;
    int dimension = 0;  // 1..3
    int cell_count = 0;
    int root_cell = 0;
    std::vector<PeriodicEdge> edges;

    // Derived: per-cell outgoing half-edges (both directions of each class).
    struct HalfEdge {
        int to_cell;
        std::array<std::int32_t, 3> delta;
    };
    std::vector<std::vector<HalfEdge>> adjacency;  // indexed by cell

    void finalize();  // builds adjacency, validates
};

/// A computable automorphism of a catalog graph.
struct AutomorphismAction {
    std::string name;
    std::function<VertexId(const VertexId&)> apply;
    std::function<VertexId(const VertexId&)> inverse;
    bool height_preserving = false;
};

/// Lazy neighbor oracle plus structural metadata for an infinite graph.
/// Immutable after construction; safe to share among concurrent readers.
class GraphModel {
public:
    std::string name;
    int dimension = 0;
    int max_degree = 0;
    int orbit_count = 1;  // M: orbits of the height group H
    bool bipartite = false;

    VertexId root() const { return root_; }

    /// Appends the neighbors of v in canonical order (cell, offset, word).
    void neighbors(const VertexId& v, std::vector<VertexId>& out) const;
    std::vector<VertexId> neighbors(const VertexId& v) const;

    /// Throws ConfigError on a malformed id for this graph.
    void validate(const VertexId& v) const { validate_fn_(v); }

    /// Index of the H-orbit of v (0 = orbit of the root).
    int orbit_index(const VertexId& v) const { return orbit_fn_(v); }

    /// A translation in H with apply(root) == target, when the catalog
    /// supports one (periodic lattices; target must be in the root orbit).
    std::optional<AutomorphismAction> translation_to(const VertexId& target) const;

    /// Non-null for periodic lattices (enables the packed enumeration engine).
    const PeriodicSpec* periodic() const { return periodic_ ? periodic_.get() : nullptr; }

    // -- construction (factories below) --
    using NeighborFn = std::function<void(const VertexId&, std::vector<VertexId>&)>;
    using ValidateFn = std::function<void(const VertexId&)>;
    using OrbitFn = std::function<int(const VertexId&)>;

    GraphModel(std::string nm, int dim, int maxdeg, int orbits, bool bip, VertexId rt,
               NeighborFn nf, ValidateFn vf, OrbitFn of,
               std::shared_ptr<const PeriodicSpec> ps = nullptr)
        : name(std::move(nm)),
          dimension(dim),
          max_degree(maxdeg),
          orbit_count(orbits),
          bipartite(bip),
          root_(std::move(rt)),
          neighbor_fn_(std::move(nf)),
          validate_fn_(std::move(vf)),
          orbit_fn_(std::move(of)),
          periodic_(std::move(ps)) {}

private:
    VertexId root_;
    NeighborFn neighbor_fn_;
    ValidateFn validate_fn_;
    OrbitFn orbit_fn_;
    std::shared_ptr<const PeriodicSpec> periodic_;
};

/// Catalog names: Z1 Z2 Z3 hex sqoct L2 L3 T3 T4 T3xZ.
GraphModel make_graph(const std::string& name);
bool is_catalog_graph(const std::string& name);
std::vector<std::string> catalog_names();

/// Builds a GraphModel from a periodic-lattice description (JSON text).
/// Format: {name, dimension, cells, edges:[{from_cell,to_cell,offset_delta}], root_cell}.
GraphModel load_lattice_json(const std::string& json_text);
GraphModel load_lattice_file(const std::string& path);

/// Graph distance d(u,v) if it does not exceed cap, else -1.
int graph_distance(const GraphModel& g, const VertexId& u, const VertexId& v, int cap);

/// Exact ball sizes [Gamma_0 .. Gamma_n] around the root.
std::vector<Count> ball_size(const GraphModel& g, int n);

/// All vertices v with d(root, v) <= n, in BFS discovery order.
std::vector<VertexId> ball_vertices(const GraphModel& g, int n);
std::vector<VertexId> ball_vertices_around(const GraphModel& g, const VertexId& center, int n);

inline VertexId apply_auto(const AutomorphismAction& a, const VertexId& v) { return a.apply(v); }

/// Composition a^k (k may be negative, using the inverse).
VertexId apply_auto_pow(const AutomorphismAction& a, const VertexId& v, int k);

AutomorphismAction identity_action();
AutomorphismAction compose(const AutomorphismAction& outer, const AutomorphismAction& inner);

/// Unit-cell translation of a periodic catalog graph, as an action in H.
AutomorphismAction lattice_translation(const GraphModel& g, std::array<std::int32_t, 3> delta);

/// Tree-specific actions (T3/T4 and T3xZ): shift along the reference ray
/// and the height-preserving swap of the two subtrees below the root.
AutomorphismAction tree_ray_shift(int branching, bool lifted);
AutomorphismAction tree_root_swap(int branching, bool lifted);
/// The z-shift (t,z) -> (t,z+1) on T3xZ.
AutomorphismAction tz_zshift();

/// The L2 rung swap (x,j) -> (x,1-j); a valid automorphism but not a
/// translation (it fixes the finite set {(0,0),(0,1)}).
AutomorphismAction ladder_rung_swap();

}  // namespace latwalk

#endif
