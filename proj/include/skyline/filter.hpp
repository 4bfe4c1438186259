#pragma once

// Pruning optimizations applied before local skyline computation: grid
// filtering over cell occupancy, and representative filtering with the
// sorted / region / random selection strategies.

#include <cstdint>
#include <vector>

#include "skyline/core.hpp"
#include "skyline/partition.hpp"

namespace skyline {

// Non-empty grid cells of a grid partitioning.
struct OccupancyMap {
    std::vector<GridCoords> non_empty;
};

// How the representatives of each partition are picked.
enum class RepSelection {
    Sorted,  // first tuples of the partition under the monotone sort
    Region,  // largest dominance-region volume (normalized data only)
    Random,  // seeded baseline
};

// A small antichain of strong tuples broadcast to every partition.
struct Representatives {
    std::vector<Point> points;
    RepSelection selection = RepSelection::Sorted;
    std::size_t q = 0;  // per-partition selection count
};

// Cells kept by grid filtering: every non-empty cell that no other non-empty
// cell strictly grid-dominates. Partitions of eliminated cells can be dropped
// wholesale before the local phase.
std::vector<GridCoords> grid_filter(const OccupancyMap& occupancy);

// Builds the occupancy map of a grid assignment from its materialized
// partitions.
OccupancyMap occupancy_of(const std::vector<Dataset>& partitions,
                          const PartitionAssignment& assignment);

// Per partition, the min(q, size) first tuples under (sum score, coords, id),
// unioned and pruned to an antichain.
Representatives select_representatives_sorted(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::size_t workers = 1);

// Per partition, the min(q, size) tuples of largest dominance-region volume
// (ties by id), unioned and pruned to an antichain. Requires normalized data.
Representatives select_representatives_region(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::size_t workers = 1);

// Baseline: min(q, size) tuples drawn at random per partition with a seed
// derived from (seed, partition index).
Representatives select_representatives_random(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::uint64_t seed,
                                              std::size_t workers = 1);

// Discards dominated candidates; literally the brute-force skyline of the
// candidate set (candidate counts are small).
std::vector<Point> prune_dominated_reps(std::vector<Point> candidates);

struct PrefilterResult {
    Dataset kept;
    std::size_t discarded = 0;
};

// Drops every tuple of the partition dominated by some representative.
// Tuples equal to a representative survive (no strict inequality).
PrefilterResult rep_prefilter(const Dataset& partition, const Representatives& reps);

}  // namespace skyline
