#ifndef LATWALK_IO_HPP
#define LATWALK_IO_HPP

#include <map>
#include <optional>
#include <string>

#include "latwalk/analysis.hpp"
#include "latwalk/construct.hpp"
#include "latwalk/enumerate.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/height.hpp"

#include <json.hpp>

namespace latwalk {

/// Append-only JSON-lines cache of exact counts, keyed by (graph fingerprint,
/// height label, quantity, n).  Corrupt or foreign-version lines are skipped
/// with a warning on stderr.
class CountCache {
public:
    static constexpr const char* version = "1";

    CountCache() = default;  // disabled
    explicit CountCache(std::string path);

    bool enabled() const { return !path_.empty(); }

    std::optional<Count> lookup(const std::string& fingerprint, const std::string& height,
                                Quantity q, int n) const;

    /// Persists a whole series, skipping entries already present.
    void store(const std::string& fingerprint, const CountSeries& series);

    /// Loads a full series [0..n_max] if every entry is cached.
    std::optional<CountSeries> load_series(const std::string& fingerprint,
                                           const std::string& height, Quantity q,
                                           int n_max) const;

    static std::string fingerprint(const GraphModel& g);

private:
    std::string path_;
    std::map<std::string, std::string> entries_;  // key -> decimal count

    static std::string key(const std::string& fp, const std::string& height, Quantity q, int n);
};

// -- report serialization ---------------------------------------------------

nlohmann::json to_json(const CountSeries& series);
nlohmann::json to_json(const GhfReport& rep);
nlohmann::json to_json(const SquareGhfCertificate& cert);
nlohmann::json to_json(const GrowthEstimate& est);
nlohmann::json to_json(const IdentityReport& rep);
nlohmann::json to_json(const OrderingReport& rep);
nlohmann::json to_json(const SubexpReport& rep);
nlohmann::json to_json(const BallisticityReport& rep);
nlohmann::json to_json(const WalkRecord& walk);
nlohmann::json to_json(const TubeSpec& tube);
nlohmann::json to_json(const PolygonAssembly& pa, const GraphModel& g);
nlohmann::json to_json(const std::vector<SequenceRow>& rows);

std::string to_csv(const CountSeries& series);
std::string to_csv(const GrowthEstimate& est);
std::string to_csv(const OrderingReport& rep);

/// Plot coordinates for 2D lattices: lattice offset plus a small per-cell
/// displacement (plot data only, not a claimed embedding).
std::pair<double, double> plot_coords(const GraphModel& g, const VertexId& v);

}  // namespace latwalk

#endif
