#include "skyline/io.hpp"

#include <json.hpp>

namespace skyline {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Random: return "random";
        case Strategy::Grid: return "grid";
        case Strategy::Angular: return "angular";
        case Strategy::Sliced: return "sliced";
    }
    return "unknown";
}

std::string merge_name(MergeKind m) {
    return m == MergeKind::Sequential ? "sequential" : "noseq";
}

std::string distribution_name(Distribution dist) {
    switch (dist) {
        case Distribution::Uniform: return "uniform";
        case Distribution::Correlated: return "correlated";
        case Distribution::Anticorrelated: return "anticorrelated";
    }
    return "unknown";
}

std::string filter_name(FilterKind filter, RepSelection selection) {
    switch (filter) {
        case FilterKind::None: return "none";
        case FilterKind::GridFilter: return "grid";
        case FilterKind::Representative:
            switch (selection) {
                case RepSelection::Sorted: return "rep-sorted";
                case RepSelection::Region: return "rep-region";
                case RepSelection::Random: return "rep-random";
            }
    }
    return "unknown";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "random") return Strategy::Random;
    if (name == "grid") return Strategy::Grid;
    if (name == "angular") return Strategy::Angular;
    if (name == "sliced") return Strategy::Sliced;
    throw ConfigError("unknown strategy '" + name + "'");
}

MergeKind parse_merge(const std::string& name) {
    if (name == "sequential") return MergeKind::Sequential;
    if (name == "noseq") return MergeKind::NoSeq;
    throw ConfigError("unknown merge mode '" + name + "'");
}

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform" || name == "uni") return Distribution::Uniform;
    if (name == "correlated" || name == "corr") return Distribution::Correlated;
    if (name == "anticorrelated" || name == "ant") return Distribution::Anticorrelated;
    throw ConfigError("unknown distribution '" + name + "'");
}

void parse_filter(const std::string& name, FilterKind& filter, RepSelection& selection) {
    if (name == "none") {
        filter = FilterKind::None;
    } else if (name == "grid") {
        filter = FilterKind::GridFilter;
    } else if (name == "rep-sorted") {
        filter = FilterKind::Representative;
        selection = RepSelection::Sorted;
    } else if (name == "rep-region") {
        filter = FilterKind::Representative;
        selection = RepSelection::Region;
    } else if (name == "rep-random") {
        filter = FilterKind::Representative;
        selection = RepSelection::Random;
    } else {
        throw ConfigError("unknown filter '" + name + "'");
    }
}

std::string run_result_to_json(const RunResult& result, bool include_timings,
                               std::optional<bool> oracle_match) {
    nlohmann::ordered_json doc;
    doc["strategy"] = strategy_name(result.config.partition.strategy);
    doc["filter"] = filter_name(result.config.filter, result.config.rep_selection);
    doc["merge"] = merge_name(result.config.merge);
    doc["workers"] = result.config.workers;
    doc["effective_p"] = result.effective_p;
    doc["partition_ms"] = include_timings ? result.metrics.partition_ms : 0.0;
    doc["local_ms"] = include_timings ? result.metrics.local_ms : 0.0;
    doc["merge_ms"] = include_timings ? result.metrics.merge_ms : 0.0;
    doc["filtered"] = result.metrics.filtered_count;
    doc["union_size"] = result.metrics.union_size;
    doc["skyline_size"] = result.metrics.final_size;
    if (oracle_match.has_value()) doc["oracle_match"] = *oracle_match;
    auto sky = nlohmann::ordered_json::array();
    for (const Point& t : result.skyline.points) {
        sky.push_back(t.coords);
    }
    doc["skyline"] = std::move(sky);
    return doc.dump();
}

}  // namespace skyline
