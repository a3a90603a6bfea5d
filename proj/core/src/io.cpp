#include "latwalk/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace latwalk {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Count cache.
// ---------------------------------------------------------------------------

std::string CountCache::key(const std::string& fp, const std::string& height, Quantity q,
                            int n) {
    return fp + "|" + height + "|" + quantity_name(q) + "|" + std::to_string(n);
}

std::string CountCache::fingerprint(const GraphModel& g) {
    if (is_catalog_graph(g.name)) return g.name;
    const PeriodicSpec* spec = g.periodic();
    if (!spec) return g.name;
    std::ostringstream os;
    os << spec->dimension << ":" << spec->cell_count << ":" << spec->root_cell;
    for (const auto& e : spec->edges)
        os << ":" << e.from_cell << "," << e.to_cell << "," << e.delta[0] << "," << e.delta[1]
           << "," << e.delta[2];
    return g.name + "-" + std::to_string(std::hash<std::string>{}(os.str()));
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // fresh cache
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.at("v").get<std::string>() != version) continue;
            const std::string k = j.at("graph").get<std::string>() + "|" +
                                  j.at("height").get<std::string>() + "|" +
                                  j.at("quantity").get<std::string>() + "|" +
                                  std::to_string(j.at("n").get<int>());
            entries_[k] = j.at("count").get<std::string>();
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << ": " << e.what()
                      << "\n";
        }
    }
}

std::optional<Count> CountCache::lookup(const std::string& fingerprint, const std::string& height,
                                        Quantity q, int n) const {
    auto it = entries_.find(key(fingerprint, height, q, n));
    if (it == entries_.end()) return std::nullopt;
    return Count::parse(it->second);
}

void CountCache::store(const std::string& fingerprint, const CountSeries& series) {
    if (!enabled()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw ConfigError("cannot open cache file for append: " + path_);
    for (int n = 0; n <= series.max_n(); ++n) {
        const std::string k = key(fingerprint, series.height_label, series.quantity, n);
        if (entries_.count(k)) continue;
        json j{{"v", version},
               {"graph", fingerprint},
               {"height", series.height_label},
               {"quantity", quantity_name(series.quantity)},
               {"n", n},
               {"count", series.at(n).str()}};
        out << j.dump() << "\n";
        entries_[k] = series.at(n).str();
    }
}

std::optional<CountSeries> CountCache::load_series(const std::string& fingerprint,
                                                   const std::string& height, Quantity q,
                                                   int n_max) const {
    CountSeries s;
    s.quantity = q;
    s.height_label = height;
    for (int n = 0; n <= n_max; ++n) {
        auto c = lookup(fingerprint, height, q, n);
        if (!c) return std::nullopt;
        s.counts.push_back(*c);
    }
    return s;
}

// ---------------------------------------------------------------------------
// JSON.
// ---------------------------------------------------------------------------

namespace {

json counts_object(const std::vector<Count>& counts, int first = 0) {
    json obj = json::object();
    for (int n = first; n < static_cast<int>(counts.size()); ++n)
        obj[std::to_string(n)] = counts[static_cast<std::size_t>(n)].str();
    return obj;
}

json failures_json(const std::vector<GhfFailure>& failures) {
    json arr = json::array();
    for (const auto& f : failures)
        arr.push_back({{"axiom", f.axiom}, {"witness", f.witness.str()}, {"detail", f.detail}});
    return arr;
}

json vertices_json(const std::vector<VertexId>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(v.str());
    return arr;
}

}  // namespace

json to_json(const CountSeries& series) {
    return json{{"quantity", quantity_name(series.quantity)},
                {"graph", series.graph},
                {"height", series.height_label},
                {"counts", counts_object(series.counts)}};
}

json to_json(const GhfReport& rep) {
    return json{{"passed", rep.passed},
                {"radius", rep.radius},
                {"checked_vertices", rep.checked_vertices},
                {"failures", failures_json(rep.failures)}};
}

json to_json(const SquareGhfCertificate& cert) {
    json j{{"passed", cert.passed},
           {"rho", cert.rho_name},
           {"delta", cert.delta},
           {"translation_checked_to", cert.translation_checked_to},
           {"commutation_radius", cert.commutation_radius},
           {"min_displacement", cert.min_displacement},
           {"nondecreasing_trend", cert.nondecreasing_trend},
           {"failures", failures_json(cert.failures)}};
    if (!cert.finite_fixed_set.empty()) j["finite_fixed_set"] = vertices_json(cert.finite_fixed_set);
    return j;
}

json to_json(const GrowthEstimate& est) {
    json per = json::object();
    for (const auto& [n, v] : est.per_n) per[std::to_string(n)] = v;
    return json{{"quantity", growth_name(est.quantity)},
                {"method", method_name(est.method)},
                {"per_n", per},
                {"final", est.final_value},
                {"max_n", est.max_n},
                {"zero_growth", est.zero_growth}};
}

json to_json(const IdentityReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"two_p", r.two_p.str()},
                        {"c_neighbor", r.c_nb.str()},
                        {"c", r.c.str()}});
    return json{{"graph", rep.graph}, {"rows", rows}, {"passed", true}};
}

json to_json(const OrderingReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"c", r.c.str()},
                        {"b", r.b.str()},
                        {"p", r.p.str()},
                        {"root_c", r.root_c},
                        {"root_b", r.root_b},
                        {"root_2p", r.root_2p}});
    return json{{"graph", rep.graph}, {"height", rep.height_label}, {"rows", rows},
                {"passed", true}};
}

json to_json(const SubexpReport& rep) {
    json slope = json::array();
    for (std::size_t n = 1; n < rep.slope.size(); ++n) slope.push_back(rep.slope[n]);
    return json{{"graph", rep.graph},
                {"slope", slope},
                {"terminal_slope", rep.terminal_slope},
                {"threshold", rep.threshold},
                {"monotone_decreasing", rep.monotone_decreasing},
                {"verdict", rep.subexponential ? "sub-exponential" : "exponential"}};
}

json to_json(const BallisticityReport& rep) {
    json hist = json::object();
    for (const auto& [d, c] : rep.histogram) hist[std::to_string(d)] = c.str();
    return json{{"n", rep.n},
                {"c", rep.c},
                {"histogram", hist},
                {"mass_le", rep.mass_le.str()},
                {"total", rep.total.str()},
                {"probability", rep.probability()}};
}

json to_json(const WalkRecord& walk) {
    const char* kind = walk.kind == WalkKind::saw      ? "saw"
                       : walk.kind == WalkKind::bridge ? "bridge"
                                                       : "polygon";
    return json{{"kind", kind}, {"length", walk.length()}, {"vertices", vertices_json(walk.vertices)}};
}

json to_json(const TubeSpec& tube) {
    return json{{"n", tube.n},
                {"ell", tube.ell},
                {"p_n", tube.p_n.str()},
                {"p_prime", tube.p_prime.str()},
                {"h_p", tube.h_p},
                {"l_n", to_json(tube.base_bridge)},
                {"gamma", tube.gamma.name},
                {"region_size", tube.region.size()},
                {"region", vertices_json(tube.region)}};
}

json to_json(const PolygonAssembly& pa, const GraphModel& g) {
    json j{{"N", pa.N},
           {"k", pa.k},
           {"t", pa.t},
           {"delta", pa.delta},
           {"bridge_out", to_json(pa.bridge_out)},
           {"bridge_back", to_json(pa.bridge_back)},
           {"nu_minus", to_json(pa.nu_minus)},
           {"nu_plus", to_json(pa.nu_plus)},
           {"polygon", to_json(pa.polygon)}};
    if (g.dimension == 2) {
        json coords = json::array();
        for (const auto& v : pa.polygon.vertices) {
            auto [x, y] = plot_coords(g, v);
            coords.push_back({x, y});
        }
        j["plot"] = coords;
    }
    return j;
}

json to_json(const std::vector<SequenceRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j{{"N", r.N},
               {"m_N", r.m_N},
               {"predicted", r.predicted.str()},
               {"lower_bound", r.lower_bound},
               {"materialized", r.materialized}};
        if (r.materialized) j["distinct_polygons"] = r.distinct_polygons.str();
        arr.push_back(j);
    }
    return arr;
}

// ---------------------------------------------------------------------------
// CSV.
// ---------------------------------------------------------------------------

std::string to_csv(const CountSeries& series) {
    std::ostringstream os;
    os << "n,count\n";
    for (int n = 0; n <= series.max_n(); ++n) os << n << "," << series.at(n).str() << "\n";
    return os.str();
}

std::string to_csv(const GrowthEstimate& est) {
    std::ostringstream os;
    os << "n," << method_name(est.method) << "\n";
    for (const auto& [n, v] : est.per_n) os << n << "," << v << "\n";
    return os.str();
}

std::string to_csv(const OrderingReport& rep) {
    std::ostringstream os;
    os << "n,count,root,ratio\n";
    double prev = 0;
    bool have_prev = false;
    for (const auto& r : rep.rows) {
        const double cur = r.c.to_double();
        os << r.n << "," << r.c.str() << "," << r.root_c << ","
           << (have_prev && prev > 0 ? cur / prev : 0.0) << "\n";
        prev = cur;
        have_prev = true;
    }
    return os.str();
}

std::pair<double, double> plot_coords(const GraphModel& g, const VertexId& v) {
    if (g.dimension != 2) throw ConfigError("plot coordinates are only defined in 2D");
    const int cells = g.periodic() ? g.periodic()->cell_count : 1;
    const double f = cells > 1 ? static_cast<double>(v.cell) / (2.0 * cells) : 0.0;
    return {v.offset[0] + f, v.offset[1] + f};
}

}  // namespace latwalk
