#pragma once

// Orchestration of the two-phase parallel pattern: partition the dataset,
// compute local skylines concurrently (optionally behind a filter), then
// merge either sequentially or fully in parallel (the no-sequential-phase
// scheme built on relative skylines against per-partition potential
// dominators).

#include <cstdint>
#include <optional>
#include <vector>

#include "skyline/core.hpp"
#include "skyline/filter.hpp"
#include "skyline/partition.hpp"

namespace skyline {

enum class FilterKind {
    None,
    GridFilter,       // grid strategy only
    Representative,
};

enum class MergeKind {
    Sequential,  // one last SFS pass over the union of the local skylines
    NoSeq,       // parallel relative skylines against potential dominators
};

struct EngineConfig {
    PartitionConfig partition;
    FilterKind filter = FilterKind::None;
    RepSelection rep_selection = RepSelection::Sorted;
    std::size_t rep_q = 5;
    MergeKind merge = MergeKind::Sequential;
    std::size_t workers = 1;
    std::uint64_t seed = 0;  // random-representative draws
};

struct PhaseMetrics {
    double partition_ms = 0.0;
    double local_ms = 0.0;  // includes the representative pass, when enabled
    double merge_ms = 0.0;
    std::vector<std::size_t> local_skyline_sizes;
    std::size_t union_size = 0;      // sum of the local skyline sizes
    std::size_t filtered_count = 0;  // tuples discarded by the active filter
    std::size_t final_size = 0;
};

struct RunResult {
    SkylineSet skyline;
    PhaseMetrics metrics;
    EngineConfig config;
    std::size_t effective_p = 0;
    std::size_t input_size = 0;
    std::size_t input_dim = 0;
};

struct LocalSkylines {
    std::vector<SkylineSet> locals;  // one per partition, empty ones included
    std::size_t filtered = 0;        // tuples removed by the representative prefilter
};

// Per partition: representative prefilter when reps are given, then SFS
// (skipping the presort where the partition order is already topological).
LocalSkylines compute_local_skylines(const std::vector<Dataset>& partitions,
                                     const Representatives* reps,
                                     const std::vector<bool>& presorted,
                                     std::size_t workers = 1);

// Sky(r) = Sky(Sky(r_1) u ... u Sky(r_p)): one SFS pass over the union.
SkylineSet merge_sequential(const std::vector<SkylineSet>& locals);

// The tuples that can still dominate members of local skyline i, id-sorted:
// every other local for random/angular, weakly grid-dominating cells for
// grid, earlier slices for sliced.
Dataset potential_dominators(std::size_t i, const std::vector<SkylineSet>& locals,
                             const PartitionAssignment& assignment);

// Sky(r) as the union of the relative skylines Sky_{pd_i}(u_i), computed
// concurrently; no sequential pass remains.
SkylineSet merge_noseq(const std::vector<SkylineSet>& locals,
                       const PartitionAssignment& assignment,
                       std::size_t workers = 1);

// End-to-end run. The resulting skyline is deterministic for a fixed
// (dataset, config) no matter how many workers execute it.
RunResult run(const Dataset& r, const EngineConfig& config);

}  // namespace skyline
