// latwalk: exact enumeration, height-function verification, growth analysis,
// and constructive polygon assembly on infinite quasi-transitive graphs.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latwalk/analysis.hpp"
#include "latwalk/construct.hpp"
#include "latwalk/enumerate.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"
#include "latwalk/io.hpp"

namespace lw = latwalk;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string graph = "Z2";
    std::string height;       // empty = graph default; "none" disables
    int n_max = 10;
    std::uint64_t budget = 0;  // search-tree nodes; 0 = unlimited
    int workers = 1;
    std::string cache_dir;    // empty = env override or default
    std::string output = "text";
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_height = true) {
    cmd->add_option("-g,--graph", cfg.graph,
                    "Catalog graph name (Z1 Z2 Z3 hex sqoct L2 L3 T3 T4 T3xZ) or a "
                    "lattice JSON file path");
    if (with_height)
        cmd->add_option("-H,--height", cfg.height, "Height function label (default per graph)");
    cmd->add_option("-n,--n", cfg.n_max, "Maximum walk length");
    cmd->add_option("--budget", cfg.budget, "Search-node budget (0 = unlimited)");
    cmd->add_option("-w,--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", cfg.cache_dir,
                    "Count cache directory (env LATWALK_CACHE_DIR overrides the default)");
    cmd->add_option("-o,--output", cfg.output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

lw::GraphModel open_graph(const RunConfig& cfg) {
    if (lw::is_catalog_graph(cfg.graph)) return lw::make_graph(cfg.graph);
    if (std::filesystem::exists(cfg.graph)) return lw::load_lattice_file(cfg.graph);
    throw lw::ConfigError("unknown graph '" + cfg.graph + "' (not a catalog name or file)");
}

lw::HeightFunction open_height(const lw::GraphModel& g, const RunConfig& cfg) {
    const std::string label = cfg.height.empty() ? lw::default_height_label(g) : cfg.height;
    return lw::height_for(g, label);
}

lw::EnumOptions enum_opts(const RunConfig& cfg) {
    lw::EnumOptions o;
    o.workers = cfg.workers;
    o.node_budget = cfg.budget;
    return o;
}

std::string cache_path(const RunConfig& cfg) {
    std::string dir = cfg.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("LATWALK_CACHE_DIR")) dir = env;
    if (dir.empty()) dir = ".latwalk-cache";
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / "counts.jsonl").string();
}

void emit_series(const RunConfig& cfg, const lw::CountSeries& s) {
    if (cfg.output == "json") {
        std::cout << lw::to_json(s).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << lw::to_csv(s);
    } else {
        std::cout << lw::quantity_name(s.quantity) << " counts on " << s.graph;
        if (!s.height_label.empty()) std::cout << " (height " << s.height_label << ")";
        std::cout << "\n";
        for (int n = 0; n <= s.max_n(); ++n)
            std::cout << "  n=" << n << "  " << s.at(n).str() << "\n";
    }
}

void emit_json_or_text(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int run_count(const RunConfig& cfg, const std::string& what) {
    lw::GraphModel g = open_graph(cfg);
    lw::Quantity q = what == "saw"        ? lw::Quantity::saw
                     : what == "polygon"  ? lw::Quantity::polygon
                     : what == "bridge"   ? lw::Quantity::bridge
                     : what == "neighbor" ? lw::Quantity::saw_to_neighbor
                                          : lw::Quantity::ball;
    std::string height_label;
    std::optional<lw::HeightFunction> h;
    if (q == lw::Quantity::bridge) {
        h = open_height(g, cfg);
        height_label = h->label;
    }

    lw::CountCache cache(cache_path(cfg));
    const std::string fp = lw::CountCache::fingerprint(g);
    lw::CountSeries series;
    auto cached = cache.load_series(fp, height_label, q, cfg.n_max);
    if (cached) {
        series = *cached;
        series.graph = g.name;
    } else {
        switch (q) {
            case lw::Quantity::saw: series = lw::count_saws(g, cfg.n_max, enum_opts(cfg)); break;
            case lw::Quantity::polygon:
                series = lw::count_polygons(g, cfg.n_max, enum_opts(cfg));
                break;
            case lw::Quantity::bridge:
                series = lw::count_bridges(g, *h, cfg.n_max, enum_opts(cfg));
                break;
            case lw::Quantity::saw_to_neighbor:
                series = lw::count_saws_to_neighbor(g, cfg.n_max, enum_opts(cfg));
                break;
            case lw::Quantity::ball: {
                series.quantity = lw::Quantity::ball;
                series.graph = g.name;
                series.counts = lw::ball_size(g, cfg.n_max);
                break;
            }
        }
        cache.store(fp, series);
    }
    emit_series(cfg, series);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const RunConfig& cfg, const std::string& what, int radius,
               const std::string& rho_label, int k_max) {
    lw::GraphModel g = open_graph(cfg);
    lw::HeightFunction h = open_height(g, cfg);
    if (what == "ghf") {
        lw::GhfReport rep = lw::verify_ghf(g, h, radius);
        std::string text = std::string("ghf check on ") + g.name + " (height " + h.label +
                           ", radius " + std::to_string(radius) + "): " +
                           (rep.passed ? "PASS" : "FAIL") + "\n";
        for (const auto& f : rep.failures)
            text += "  axiom (" + f.axiom + ") fails at " + f.witness.str() + ": " + f.detail +
                    "\n";
        emit_json_or_text(cfg, lw::to_json(rep), text);
        return rep.passed ? 0 : 2;
    }
    const std::string rl = rho_label.empty() ? lw::default_rho_label(g) : rho_label;
    lw::AutomorphismAction rho = lw::rho_for(g, rl);
    lw::SquareGhfCertificate cert = lw::verify_square_ghf(g, h, rho, radius, k_max);
    std::string text = std::string("square-ghf check on ") + g.name + " (height " + h.label +
                       ", rho " + rl + "): " + (cert.passed ? "PASS" : "FAIL") + "\n";
    text += "  delta=" + std::to_string(cert.delta) + "\n";
    for (const auto& f : cert.failures)
        text += "  axiom (" + f.axiom + ") fails at " + f.witness.str() + ": " + f.detail + "\n";
    if (!cert.finite_fixed_set.empty()) {
        text += "  finite fixed set:";
        for (const auto& v : cert.finite_fixed_set) text += " " + v.str();
        text += "\n";
    }
    emit_json_or_text(cfg, lw::to_json(cert), text);
    return cert.passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// estimate
// ---------------------------------------------------------------------------

int run_estimate(const RunConfig& cfg, const std::string& what, const std::string& method) {
    lw::GraphModel g = open_graph(cfg);
    lw::EstimateMethod m =
        method == "root" ? lw::EstimateMethod::nth_root : lw::EstimateMethod::ratio;
    lw::GrowthEstimate est;
    if (what == "mu")
        est = lw::estimate_mu(g, cfg.n_max, m, enum_opts(cfg));
    else if (what == "beta")
        est = lw::estimate_beta(g, open_height(g, cfg), cfg.n_max, m, enum_opts(cfg));
    else
        est = lw::estimate_pi(g, cfg.n_max, m, enum_opts(cfg));
    if (cfg.output == "csv") {
        std::cout << lw::to_csv(est);
        return 0;
    }
    std::string text = std::string(lw::growth_name(est.quantity)) + " estimate on " + g.name +
                       " (" + lw::method_name(est.method) + ", n<=" + std::to_string(est.max_n) +
                       "): " +
                       (est.zero_growth ? std::string("0 (all counts zero)")
                                        : std::to_string(est.final_value)) +
                       "\n";
    emit_json_or_text(cfg, lw::to_json(est), text);
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const RunConfig& cfg, const std::string& what) {
    lw::GraphModel g = open_graph(cfg);
    if (what == "identity") {
        lw::IdentityReport rep = lw::identity_check(g, cfg.n_max, enum_opts(cfg));
        std::string text = "identity 2p_n = c_{n-1}(d1) <= c_n on " + g.name + ": PASS\n";
        for (const auto& r : rep.rows)
            text += "  n=" + std::to_string(r.n) + "  2p=" + r.two_p.str() + "  c_nb=" +
                    r.c_nb.str() + "  c=" + r.c.str() + "\n";
        emit_json_or_text(cfg, lw::to_json(rep), text);
        return 0;
    }
    if (what == "ordering") {
        lw::OrderingReport rep =
            lw::ordering_check(g, open_height(g, cfg), cfg.n_max, enum_opts(cfg));
        if (cfg.output == "csv") {
            std::cout << lw::to_csv(rep);
            return 0;
        }
        std::string text = "ordering b_n <= c_n, 2p_n <= c_n on " + g.name + ": PASS\n";
        for (const auto& r : rep.rows)
            text += "  n=" + std::to_string(r.n) + "  c=" + r.c.str() + "  b=" + r.b.str() +
                    "  p=" + r.p.str() + "\n";
        emit_json_or_text(cfg, lw::to_json(rep), text);
        return 0;
    }
    lw::SubexpReport rep = lw::subexponential_diagnostic(g, cfg.n_max);
    std::string text = std::string("growth diagnostic on ") + g.name + ": " +
                       (rep.subexponential ? "sub-exponential" : "exponential") +
                       " (terminal slope " + std::to_string(rep.terminal_slope) + ")\n";
    emit_json_or_text(cfg, lw::to_json(rep), text);
    return 0;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int run_construct(const RunConfig& cfg, const std::string& what, const std::string& rho_label,
                  int k, int k_cap, int N, int N_max, int materialize_cap) {
    lw::GraphModel g = open_graph(cfg);
    lw::HeightFunction h = open_height(g, cfg);
    lw::StiffPathTable stiff = lw::compute_stiff_paths(g, h, 32);
    lw::TubeSpec tube = lw::build_tube(g, h, stiff, cfg.n_max, enum_opts(cfg));

    if (what == "tube") {
        std::string text = "tube on " + g.name + ": n=" + std::to_string(tube.n) + " ell=" +
                           std::to_string(tube.ell) + " P'=" + tube.p_prime.str() + " h(P')=" +
                           std::to_string(tube.h_p) + " |l_n|=" +
                           std::to_string(tube.base_bridge.length()) + " |D_n|=" +
                           std::to_string(tube.region.size()) + "\n";
        emit_json_or_text(cfg, lw::to_json(tube), text);
        return 0;
    }

    const std::string rl = rho_label.empty() ? lw::default_rho_label(g) : rho_label;
    lw::AutomorphismAction rho = lw::rho_for(g, rl);
    if (k == 0) k = lw::find_disjoint_k(g, tube, rho, what == "polygon" ? N : N_max, k_cap);

    if (what == "polygon") {
        std::vector<lw::WalkRecord> copies(static_cast<std::size_t>(N), tube.base_bridge);
        lw::WalkRecord out = lw::concatenate_bridges(g, h, tube, copies, N);
        lw::PolygonAssembly pa = lw::assemble_polygon(g, h, tube, rho, k, N, out, out);
        std::string text = "assembled polygon on " + g.name + ": N=" + std::to_string(pa.N) +
                           " k=" + std::to_string(pa.k) + " t=" + std::to_string(pa.t) +
                           " delta=" + std::to_string(pa.delta) + " length=" +
                           std::to_string(pa.polygon.length()) + "\n";
        emit_json_or_text(cfg, lw::to_json(pa, g), text);
        return 0;
    }

    std::vector<lw::SequenceRow> rows =
        lw::arithmetic_subsequence(g, h, tube, rho, k, N_max, materialize_cap);
    std::string text = "arithmetic polygon subsequence on " + g.name + " (k=" +
                       std::to_string(k) + "):\n";
    for (const auto& r : rows) {
        text += "  N=" + std::to_string(r.N) + "  m_N=" + std::to_string(r.m_N) +
                "  predicted=" + r.predicted.str() + "  lower=" + std::to_string(r.lower_bound);
        if (r.materialized) text += "  distinct=" + r.distinct_polygons.str();
        text += "\n";
    }
    emit_json_or_text(cfg, lw::to_json(rows), text);
    return 0;
}

// ---------------------------------------------------------------------------
// ball
// ---------------------------------------------------------------------------

int run_ball(const RunConfig& cfg, const std::string& what, double c) {
    lw::GraphModel g = open_graph(cfg);
    if (what == "histogram") {
        auto hist = lw::endpoint_distance_histogram(g, cfg.n_max, enum_opts(cfg));
        json jh = json::object();
        std::string text =
            "endpoint distance histogram on " + g.name + " at n=" + std::to_string(cfg.n_max) +
            ":\n";
        for (const auto& [d, cnt] : hist) {
            jh[std::to_string(d)] = cnt.str();
            text += "  d=" + std::to_string(d) + "  " + cnt.str() + "\n";
        }
        emit_json_or_text(cfg, json{{"graph", g.name}, {"n", cfg.n_max}, {"histogram", jh}},
                          text);
        return 0;
    }
    lw::BallisticityReport rep = lw::ballisticity(g, cfg.n_max, c, enum_opts(cfg));
    std::string text = "P_" + std::to_string(rep.n) + "(d <= " + std::to_string(c) + "*n) on " +
                       g.name + " = " + rep.mass_le.str() + "/" + rep.total.str() + " = " +
                       std::to_string(rep.probability()) + "\n";
    emit_json_or_text(cfg, lw::to_json(rep), text);
    return 0;
}

json error_json(const char* type, const std::string& msg) {
    return json{{"error", {{"type", type}, {"message", msg}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SAW / polygon / bridge enumeration and height-function analysis"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string sub;        // second-level selector
    int radius = 3;
    std::string rho_label;
    int k_max = 4;
    std::string method = "ratio";
    int k = 0, k_cap = 64, N = 1, N_max = 3, materialize_cap = 2;
    double c = 1.0;

    auto* count = app.add_subcommand("count", "Exact per-length counts");
    count->add_option("what", sub, "saw|polygon|bridge|ball|neighbor")
        ->required()
        ->check(CLI::IsMember({"saw", "polygon", "bridge", "ball", "neighbor"}));
    add_common(count, cfg);

    auto* verify = app.add_subcommand("verify", "Height-function axiom checks");
    verify->add_option("what", sub, "ghf|square-ghf")
        ->required()
        ->check(CLI::IsMember({"ghf", "square-ghf"}));
    add_common(verify, cfg);
    verify->add_option("-r,--radius", radius, "Ball radius to check");
    verify->add_option("--rho", rho_label, "Candidate translation label");
    verify->add_option("--k-max", k_max, "Largest power of rho checked");

    auto* estimate = app.add_subcommand("estimate", "Growth constant estimates");
    estimate->add_option("what", sub, "mu|beta|pi")
        ->required()
        ->check(CLI::IsMember({"mu", "beta", "pi"}));
    add_common(estimate, cfg);
    estimate->add_option("-m,--method", method, "root|ratio")
        ->check(CLI::IsMember({"root", "ratio"}));

    auto* check = app.add_subcommand("check", "Exact identities and diagnostics");
    check->add_option("what", sub, "identity|ordering|subexp")
        ->required()
        ->check(CLI::IsMember({"identity", "ordering", "subexp"}));
    add_common(check, cfg);

    auto* construct = app.add_subcommand("construct", "Bridge-to-polygon assembly");
    construct->add_option("what", sub, "tube|polygon|sequence")
        ->required()
        ->check(CLI::IsMember({"tube", "polygon", "sequence"}));
    add_common(construct, cfg);
    construct->add_option("--rho", rho_label, "Translation label");
    construct->add_option("-k,--k", k, "Shift power (0 = smallest disjoint k)");
    construct->add_option("--k-cap", k_cap, "Search cap for the disjoint k");
    construct->add_option("-N,--copies", N, "Number of chained bridges");
    construct->add_option("--N-max", N_max, "Largest N in the sequence");
    construct->add_option("--materialize-cap", materialize_cap,
                          "Materialize/dedup polygons for N up to this");

    auto* ball = app.add_subcommand("ball", "Endpoint displacement statistics");
    ball->add_option("what", sub, "histogram|prob")
        ->required()
        ->check(CLI::IsMember({"histogram", "prob"}));
    add_common(ball, cfg, /*with_height=*/false);
    ball->add_option("-c,--speed", c, "Linear speed threshold in P(d <= c*n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage errors are exit 1; --help stays 0
    }

    try {
        if (count->parsed()) return run_count(cfg, sub);
        if (verify->parsed()) return run_verify(cfg, sub, radius, rho_label, k_max);
        if (estimate->parsed()) return run_estimate(cfg, sub, method);
        if (check->parsed()) return run_check(cfg, sub);
        if (construct->parsed())
            return run_construct(cfg, sub, rho_label, k, k_cap, N, N_max, materialize_cap);
        if (ball->parsed()) return run_ball(cfg, sub, c);
    } catch (const lw::ConsistencyError& e) {
        std::cerr << error_json("consistency", e.what()).dump() << "\n";
        return 2;
    } catch (const lw::ConstructionError& e) {
        std::cerr << error_json("construction", e.what()).dump() << "\n";
        return 2;
    } catch (const lw::ConfigError& e) {
        std::cerr << error_json("config", e.what()).dump() << "\n";
        return 1;
    } catch (const lw::BudgetError& e) {
        std::cerr << error_json("budget", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
    return 1;
}
