#pragma once

// Result serialization and the string vocabulary shared by the CLI, the
// bench output, and the tests.

#include <optional>
#include <string>

#include "skyline/datagen.hpp"
#include "skyline/engine.hpp"

namespace skyline {

std::string strategy_name(Strategy s);
std::string merge_name(MergeKind m);
std::string distribution_name(Distribution dist);
// none | grid | rep-sorted | rep-region | rep-random
std::string filter_name(FilterKind filter, RepSelection selection);

Strategy parse_strategy(const std::string& name);
MergeKind parse_merge(const std::string& name);
Distribution parse_distribution(const std::string& name);
void parse_filter(const std::string& name, FilterKind& filter, RepSelection& selection);

// Fixed-schema JSON document for one run:
//   strategy, filter, merge, workers, effective_p, partition_ms, local_ms,
//   merge_ms, filtered, union_size, skyline_size, [oracle_match,] skyline
// where skyline is the id-sorted array of coordinate arrays. Zeroing the
// timings makes the output byte-reproducible for a fixed (input, config).
std::string run_result_to_json(const RunResult& result, bool include_timings,
                               std::optional<bool> oracle_match = std::nullopt);

}  // namespace skyline
