#ifndef LATWALK_CONSTRUCT_HPP
#define LATWALK_CONSTRUCT_HPP

#include <functional>
#include <vector>

#include "latwalk/enumerate.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"
#include "latwalk/walk.hpp"

namespace latwalk {

/// The tube building block: a shortest bridge l_n from the root to P_n' in
/// the root orbit, and the finite region D_n of vertices within distance n of
/// l_n whose heights lie in [1, h(P_n')].
struct TubeSpec {
    int n = 0;
    int ell = 0;                 // stiff extension length, 0 <= ell <= r
    VertexId p_n;                // census maximizer
    VertexId p_prime;            // P_n', in the root orbit
    int h_p = 0;                 // h(P_n')
    WalkRecord base_bridge;      // l_n: shortest bridge root -> P_n'
    AutomorphismAction gamma;    // gamma(root) = P_n'
    std::vector<VertexId> region;  // materialized D_n, canonically sorted
    std::function<bool(const VertexId&)> membership;
};

struct Connectors {
    WalkRecord nu_minus;  // root -> rho^k(root), interior heights < 0
    WalkRecord nu_plus;   // top endpoint -> its rho^k image, interiors above
    int t = 0;            // descent/ascent depth (max of the two sides)
    int delta = 0;        // shift bound: d(v, rho(v)) <= delta
};

struct PolygonAssembly {
    int N = 1;
    int k = 1;
    int t = 0;
    int delta = 0;
    WalkRecord nu_minus;
    WalkRecord nu_plus;
    WalkRecord bridge_out;   // root -> endpoint, inside the tube
    WalkRecord bridge_back;  // as given (untranslated)
    WalkRecord polygon;      // closed, through the root
};

struct SequenceRow {
    int N = 0;
    long long m_N = 0;        // 2(n+ell)N + l_minus + l_plus
    Count predicted;          // (materializable bridge count)^{2N}
    double lower_bound = 0;   // (b_n / Gamma_n)^{2N}
    bool materialized = false;
    Count distinct_polygons;  // when materialized: deduped assembled polygons
};

/// Max over vertex classes of d(v, rho(v)).
int compute_delta(const GraphModel& g, const AutomorphismAction& rho);

/// Selects P_n maximizing the bridge endpoint census (ties: higher height,
/// then canonical order), extends by a stiff path into the root orbit, and
/// computes the shortest bridge l_n and the region D_n.
TubeSpec build_tube(const GraphModel& g, const HeightFunction& h, const StiffPathTable& stiff,
                    int n, const EnumOptions& opts = {});

/// Chains N bridges end-to-end: each subsequent bridge is translated so its
/// start lands on the current endpoint.  The result is an N-fold bridge.
WalkRecord concatenate_bridges(const GraphModel& g, const HeightFunction& h, const TubeSpec& tube,
                               const std::vector<WalkRecord>& bridges, int N);

/// Least k <= k_cap with S_N and rho^k(S_N) disjoint, where S_N is the union
/// of the first N gamma-translates of D_n.  Exhaustive membership test.
int find_disjoint_k(const GraphModel& g, const TubeSpec& tube, const AutomorphismAction& rho,
                    int N, int k_cap);

/// The connector paths nu-minus (below height 0) and nu-plus (above the tube
/// top), built per the descent/crossing/translated-descent scheme.
Connectors build_connectors(const GraphModel& g, const HeightFunction& h, const TubeSpec& tube,
                            const AutomorphismAction& rho, int k, int N);

/// Closes bridge_out, nu-plus, the reversed rho^k-translate of bridge_back,
/// and reversed nu-minus into a verified polygon through the root.
PolygonAssembly assemble_polygon(const GraphModel& g, const HeightFunction& h,
                                 const TubeSpec& tube, const AutomorphismAction& rho, int k,
                                 int N, const WalkRecord& bridge_out,
                                 const WalkRecord& bridge_back);

/// Rows m_N = 2(n+ell)N + l- + l+ for N = 1..N_max; polygons are materialized
/// and deduped for N <= materialize_cap.
std::vector<SequenceRow> arithmetic_subsequence(const GraphModel& g, const HeightFunction& h,
                                                const TubeSpec& tube,
                                                const AutomorphismAction& rho, int k, int N_max,
                                                int materialize_cap = 2);

}  // namespace latwalk

#endif
