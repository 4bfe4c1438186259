#pragma once

// The four partitioning strategies (random, grid, angular, sliced) plus the
// cell-level dominance relations used by grid filtering and the parallel
// merge.

#include <cstdint>
#include <vector>

#include "skyline/core.hpp"

namespace skyline {

enum class Strategy {
    Random,
    Grid,
    Angular,
    Sliced,
};

struct PartitionConfig {
    Strategy strategy = Strategy::Random;
    std::size_t p = 1;          // target partition count (Random/Sliced; snap target otherwise)
    std::size_t m = 0;          // slices per dimension for Grid/Angular; 0 = derive from p
    std::uint64_t seed = 0;     // Random only
    std::size_t slice_dim = 0;  // Sliced only
};

// Per-dimension cell indices of a grid cell, each in [0, m-1].
struct GridCoords {
    std::vector<std::uint32_t> cells;

    std::size_t dim() const { return cells.size(); }
    bool operator==(const GridCoords& other) const = default;
};

// Output of a partitioning pass: a total assignment of points to partitions
// plus the strategy-specific meta-information the later phases need.
struct PartitionAssignment {
    Strategy strategy = Strategy::Random;
    std::size_t partition_count = 1;
    std::size_t d = 0;
    bool normalized = false;

    // Partition index per point, aligned with the dataset's point order.
    std::vector<std::size_t> partition_of;

    // Order in which points must be appended to their partitions; empty means
    // natural order. Sliced uses this to keep each partition sorted.
    std::vector<std::size_t> scan_order;

    std::size_t slices = 0;    // m (Grid/Angular)
    bool presorted = false;    // Sliced: every partition is a topological sort
};

// Seeded permutation, then round-robin: partition sizes differ by at most 1.
PartitionAssignment assign_random(const Dataset& r, std::size_t p, std::uint64_t seed);

// Grid cell of t with each per-dimension cell floor(t[j]*m) clamped to m-1.
// Requires coordinates in [0,1].
GridCoords grid_coords(const Point& t, std::size_t m);

// Base-m positional encoding of grid_coords(t, m).
std::size_t grid_index(const Point& t, std::size_t m);

std::size_t encode_grid_coords(const GridCoords& c, std::size_t m);
GridCoords decode_grid_index(std::size_t index, std::size_t m, std::size_t d);

// Strict cell dominance: a[j] < b[j] on every dimension. Implies that every
// tuple of cell a dominates every tuple of cell b.
bool grid_dominates(const GridCoords& a, const GridCoords& b);

// Weak cell dominance: a != b and a[j] <= b[j] on every dimension. Cells not
// weakly dominating b cannot contain any dominator of b's tuples.
bool weak_grid_dominates(const GridCoords& a, const GridCoords& b);

// Hyper-spherical angular coordinates phi_1..phi_{d-1}, each in [0, pi/2]:
// tan(phi_i) = sqrt(sum_{j>i} x_j^2) / x_i, with phi_i = pi/2 when x_i = 0
// and the tail is positive, and phi_i = 0 when both are zero. The radial
// coordinate is unused and not returned. Requires d >= 2.
std::vector<double> hyperspherical_angles(const Point& t);

// Grid partitioning on the angular coordinates: each angle is divided into m
// slices (slice floor(2*phi*m/pi) clamped to m-1), giving m^(d-1) partitions.
std::size_t angular_index(const Point& t, std::size_t m);

PartitionAssignment assign_grid(const Dataset& r, std::size_t m);
PartitionAssignment assign_angular(const Dataset& r, std::size_t m);

// Sorts by (coords[slice_dim], remaining coordinates lexicographically, id)
// and cuts the sorted order into p contiguous, equi-numerous ranges: the
// tuple at 0-based sorted rank i goes to partition floor(i*p/(N-1)), clamped
// to p-1. The sort key makes the order topological w.r.t. dominance, so each
// partition can be scanned by SFS without presorting.
PartitionAssignment assign_sliced(const Dataset& r, std::size_t p, std::size_t slice_dim);

// Slices per dimension whose k-th power is nearest to the target partition
// count, ties resolved toward the smaller m.
std::size_t snap_slices(std::size_t target_p, std::size_t k);

// Strategy dispatch; derives m from the target p when unset.
PartitionAssignment make_assignment(const Dataset& r, const PartitionConfig& config);

// Materializes the partitions in scan order.
std::vector<Dataset> split(const Dataset& r, const PartitionAssignment& assignment);

}  // namespace skyline
