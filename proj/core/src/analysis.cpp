#include "latwalk/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace latwalk {

const char* growth_name(GrowthQuantity q) {
    switch (q) {
        case GrowthQuantity::mu: return "mu";
        case GrowthQuantity::beta: return "beta";
        case GrowthQuantity::pi: return "pi";
    }
    return "?";
}

const char* method_name(EstimateMethod m) {
    return m == EstimateMethod::nth_root ? "nth_root" : "ratio";
}

GrowthEstimate estimate_growth(const CountSeries& series, GrowthQuantity quantity,
                               EstimateMethod method, bool even_only) {
    GrowthEstimate est;
    est.quantity = quantity;
    est.method = method;

    std::vector<int> usable;  // indices with positive counts, filtered by parity
    for (int n = 1; n <= series.max_n(); ++n) {
        if (even_only && n % 2 != 0) continue;
        if (!series.at(n).is_zero()) usable.push_back(n);
    }
    if (usable.empty()) {
        est.zero_growth = true;
        est.final_value = 0.0;
        return est;
    }
    if (usable.size() < 4)
        throw ConfigError("need at least 4 nonzero entries to estimate growth");

    const int step = even_only ? 2 : 1;
    for (int n : usable) {
        if (method == EstimateMethod::nth_root) {
            est.per_n[n] = std::pow(series.at(n).to_double(), 1.0 / n);
        } else {
            const int m = n - step;
            if (m < 1 || m > series.max_n() || series.at(m).is_zero()) continue;
            const double ratio = series.at(n).to_double() / series.at(m).to_double();
            est.per_n[n] = step == 1 ? ratio : std::sqrt(ratio);
        }
    }
    if (est.per_n.empty()) throw ConfigError("no usable ratio entries in the series");
    est.max_n = est.per_n.rbegin()->first;
    est.final_value = est.per_n.rbegin()->second;
    return est;
}

GrowthEstimate estimate_mu(const GraphModel& g, int n_max, EstimateMethod method,
                           const EnumOptions& opts) {
    return estimate_growth(count_saws(g, n_max, opts), GrowthQuantity::mu, method);
}

GrowthEstimate estimate_beta(const GraphModel& g, const HeightFunction& h, int n_max,
                             EstimateMethod method, const EnumOptions& opts) {
    GrowthEstimate up = estimate_growth(count_bridges(g, h, n_max, opts), GrowthQuantity::beta,
                                        method);
    GrowthEstimate down = estimate_growth(count_bridges(g, negate_height(h), n_max, opts),
                                          GrowthQuantity::beta, method);
    return down.final_value > up.final_value ? down : up;
}

GrowthEstimate estimate_pi(const GraphModel& g, int n_max, EstimateMethod method,
                           const EnumOptions& opts) {
    return estimate_growth(count_polygons(g, n_max, opts), GrowthQuantity::pi, method,
                           g.bipartite);
}

IdentityReport identity_check(const GraphModel& g, int n_max, const EnumOptions& opts) {
    if (n_max < 3) throw ConfigError("identity check needs n_max >= 3");
    IdentityReport rep;
    rep.graph = g.name;
    CountSeries c = count_saws(g, n_max, opts);
    CountSeries nb = count_saws_to_neighbor(g, n_max - 1, opts);
    CountSeries p = count_polygons_direct(g, n_max, opts);
    for (int n = 3; n <= n_max; ++n) {
        IdentityRow row;
        row.n = n;
        row.two_p = p.at(n) + p.at(n);
        row.c_nb = nb.at(n - 1);
        row.c = c.at(n);
        if (row.two_p != row.c_nb)
            throw ConsistencyError("2 p_n != c_{n-1}(d1) at n=" + std::to_string(n) + ": " +
                                   row.two_p.str() + " vs " + row.c_nb.str());
        if (row.c_nb > row.c)
            throw ConsistencyError("c_{n-1}(d1) > c_n at n=" + std::to_string(n));
        rep.rows.push_back(row);
    }
    return rep;
}

OrderingReport ordering_check(const GraphModel& g, const HeightFunction& h, int n_max,
                              const EnumOptions& opts) {
    if (n_max < 3) throw ConfigError("ordering check needs n_max >= 3");
    OrderingReport rep;
    rep.graph = g.name;
    rep.height_label = h.label;
    CountSeries c = count_saws(g, n_max, opts);
    CountSeries b = count_bridges(g, h, n_max, opts);
    CountSeries p = count_polygons(g, n_max, opts);
    for (int n = 1; n <= n_max; ++n) {
        OrderingRow row;
        row.n = n;
        row.c = c.at(n);
        row.b = b.at(n);
        row.p = n >= 3 ? p.at(n) : Count(0);
        if (row.b > row.c) throw ConsistencyError("b_n > c_n at n=" + std::to_string(n));
        const Count two_p = row.p + row.p;
        if (two_p > row.c) throw ConsistencyError("2 p_n > c_n at n=" + std::to_string(n));
        row.root_c = std::pow(row.c.to_double(), 1.0 / n);
        row.root_b = row.b.is_zero() ? 0.0 : std::pow(row.b.to_double(), 1.0 / n);
        row.root_2p = two_p.is_zero() ? 0.0 : std::pow(two_p.to_double(), 1.0 / n);
        rep.rows.push_back(row);
    }
    return rep;
}

SubexpReport subexponential_diagnostic(const GraphModel& g, int n_max, double threshold) {
    if (n_max < 4) throw ConfigError("subexponential diagnostic needs n_max >= 4");
    SubexpReport rep;
    rep.graph = g.name;
    rep.threshold = threshold;
    std::vector<Count> gamma = ball_size(g, n_max);
    std::vector<double> log_gamma(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) log_gamma[i] = std::log(gamma[i].to_double());

    rep.slope.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n)
        rep.slope[static_cast<std::size_t>(n)] = log_gamma[static_cast<std::size_t>(n)] / n;

    rep.monotone_decreasing = true;
    for (int n = 2; n <= n_max; ++n)
        if (rep.slope[static_cast<std::size_t>(n)] >
            rep.slope[static_cast<std::size_t>(n - 1)] + 1e-12)
            rep.monotone_decreasing = false;

    // Extrapolated slope: with log Gamma_n ~ a n + b log n + c, the quantity
    // n r_n - (n-1) r_{n-1} (r_n the log-ratio) converges to a.  Average the
    // last two values to damp the parity wobble of bipartite graphs.
    auto extrapolated = [&](int n) {
        const double rn = log_gamma[static_cast<std::size_t>(n)] -
                          log_gamma[static_cast<std::size_t>(n - 1)];
        const double rp = log_gamma[static_cast<std::size_t>(n - 1)] -
                          log_gamma[static_cast<std::size_t>(n - 2)];
        return n * rn - (n - 1) * rp;
    };
    rep.terminal_slope = 0.5 * (extrapolated(n_max) + extrapolated(n_max - 1));
    rep.subexponential = rep.terminal_slope <= threshold;
    return rep;
}

BallisticityReport ballisticity(const GraphModel& g, int n, double c, const EnumOptions& opts) {
    if (n < 1) throw ConfigError("ballisticity needs n >= 1");
    if (c < 0) throw ConfigError("speed threshold must be nonnegative");
    BallisticityReport rep;
    rep.n = n;
    rep.c = c;
    rep.histogram = endpoint_distance_histogram(g, n, opts);
    for (const auto& [d, count] : rep.histogram) {
        rep.total += count;
        if (static_cast<double>(d) <= c * n + 1e-12) rep.mass_le += count;
    }
    return rep;
}

}  // namespace latwalk
