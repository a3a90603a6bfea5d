#ifndef LATWALK_ANALYSIS_HPP
#define LATWALK_ANALYSIS_HPP

#include <map>
#include <vector>

#include "latwalk/enumerate.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"

namespace latwalk {

enum class GrowthQuantity { mu, beta, pi };
enum class EstimateMethod { nth_root, ratio };
const char* growth_name(GrowthQuantity q);
const char* method_name(EstimateMethod m);

struct GrowthEstimate {
    GrowthQuantity quantity = GrowthQuantity::mu;
    EstimateMethod method = EstimateMethod::nth_root;
    std::map<int, double> per_n;
    double final_value = 0.0;  // value at the largest usable n
    int max_n = 0;
    bool zero_growth = false;  // all counts zero (e.g. polygons on a tree)
};

/// Plain nth-root or ratio estimates from an exact series.  With even_only
/// (bipartite polygon counts) odd indices are ignored and the ratio spans two
/// steps, reported as a square root.
GrowthEstimate estimate_growth(const CountSeries& series, GrowthQuantity quantity,
                               EstimateMethod method, bool even_only = false);

GrowthEstimate estimate_mu(const GraphModel& g, int n_max, EstimateMethod method,
                           const EnumOptions& opts = {});
/// max of the h and -h bridge estimates (covers the non-unimodular case).
GrowthEstimate estimate_beta(const GraphModel& g, const HeightFunction& h, int n_max,
                             EstimateMethod method, const EnumOptions& opts = {});
GrowthEstimate estimate_pi(const GraphModel& g, int n_max, EstimateMethod method,
                           const EnumOptions& opts = {});

/// 2 p_n = c_{n-1}(d1) <= c_n, with p_n from independent direct cycle
/// enumeration.  Throws ConsistencyError on any exact violation.
struct IdentityRow {
    int n = 0;
    Count two_p;     // 2 * direct polygon count
    Count c_nb;      // c_{n-1}(d1)
    Count c;         // c_n
};
struct IdentityReport {
    std::string graph;
    std::vector<IdentityRow> rows;  // n = 3..n_max
};
IdentityReport identity_check(const GraphModel& g, int n_max, const EnumOptions& opts = {});

/// Per-n curves for the three quantities plus the exact inequalities
/// (2p_n)^{1/n} <= c_n^{1/n} and b_n <= c_n.  Throws on violation.
struct OrderingRow {
    int n = 0;
    Count c, b, p;
    double root_c = 0, root_b = 0, root_2p = 0;  // 0 when undefined
};
struct OrderingReport {
    std::string graph;
    std::string height_label;
    std::vector<OrderingRow> rows;
};
OrderingReport ordering_check(const GraphModel& g, const HeightFunction& h, int n_max,
                              const EnumOptions& opts = {});

/// (1/n) log Gamma_n and an extrapolated terminal slope; the verdict flags
/// exponential growth when the slope stabilizes above the threshold.
struct SubexpReport {
    std::string graph;
    std::vector<double> slope;  // index n >= 1: (1/n) log Gamma_n
    double terminal_slope = 0.0;
    double threshold = 0.05;
    bool monotone_decreasing = false;
    bool subexponential = false;
};
SubexpReport subexponential_diagnostic(const GraphModel& g, int n_max, double threshold = 0.05);

/// Exact P(d(root, endpoint) <= c*n) over uniform n-step SAWs.
struct BallisticityReport {
    int n = 0;
    double c = 0.0;
    std::map<int, Count> histogram;
    Count mass_le;  // mass at distances <= c*n
    Count total;    // c_n

    double probability() const {
        return total.is_zero() ? 0.0 : mass_le.to_double() / total.to_double();
    }
};
BallisticityReport ballisticity(const GraphModel& g, int n, double c,
                                const EnumOptions& opts = {});

}  // namespace latwalk

#endif
