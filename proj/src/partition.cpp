#include "skyline/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skyline/rng.hpp"

namespace skyline {

namespace {

// Upper bound on materialized partitions; m^d grows fast.
constexpr std::size_t kMaxPartitions = std::size_t{1} << 22;

std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > kMaxPartitions) return kMaxPartitions + 1;
        result *= base;
    }
    return result;
}

std::size_t cell_of(double v, std::size_t m) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw NormalizationError("grid index needs coordinates in [0,1], got " +
                                 std::to_string(v));
    }
    const auto cell = static_cast<std::size_t>(v * static_cast<double>(m));
    return cell >= m ? m - 1 : cell;
}

}  // namespace

PartitionAssignment assign_random(const Dataset& r, std::size_t p, std::uint64_t seed) {
    if (p < 1) throw ConfigError("partition count must be >= 1");
    PartitionAssignment out;
    out.strategy = Strategy::Random;
    out.partition_count = p;
    out.d = r.d;
    out.normalized = r.normalized;

    std::vector<std::size_t> perm(r.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(seed);
    shuffle(perm, rng);

    out.partition_of.resize(r.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.partition_of[perm[i]] = i % p;
    }
    return out;
}

GridCoords grid_coords(const Point& t, std::size_t m) {
    if (m < 1) throw ConfigError("slices per dimension must be >= 1");
    GridCoords c;
    c.cells.reserve(t.dim());
    for (double v : t.coords) {
        c.cells.push_back(static_cast<std::uint32_t>(cell_of(v, m)));
    }
    return c;
}

std::size_t grid_index(const Point& t, std::size_t m) {
    if (m < 1) throw ConfigError("slices per dimension must be >= 1");
    std::size_t index = 0;
    std::size_t stride = 1;
    for (double v : t.coords) {
        index += cell_of(v, m) * stride;
        stride *= m;
    }
    return index;
}

std::size_t encode_grid_coords(const GridCoords& c, std::size_t m) {
    std::size_t index = 0;
    std::size_t stride = 1;
    for (std::uint32_t cell : c.cells) {
        index += cell * stride;
        stride *= m;
    }
    return index;
}

GridCoords decode_grid_index(std::size_t index, std::size_t m, std::size_t d) {
    GridCoords c;
    c.cells.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        c.cells.push_back(static_cast<std::uint32_t>(index % m));
        index /= m;
    }
    return c;
}

bool grid_dominates(const GridCoords& a, const GridCoords& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("grid dominance on cells of unequal dimensionality");
    }
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a.cells[j] >= b.cells[j]) return false;
    }
    return true;
}

bool weak_grid_dominates(const GridCoords& a, const GridCoords& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("weak grid dominance on cells of unequal dimensionality");
    }
    if (a == b) return false;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a.cells[j] > b.cells[j]) return false;
    }
    return true;
}

std::vector<double> hyperspherical_angles(const Point& t) {
    const std::size_t d = t.dim();
    if (d < 2) {
        throw DimensionError("angular coordinates need d >= 2, got d = " +
                             std::to_string(d));
    }
    // Tail sums of squares, back to front; atan2 covers both zero conventions
    // (atan2(pos, 0) = pi/2, atan2(0, 0) = 0).
    std::vector<double> angles(d - 1);
    double tail_sq = t.coords[d - 1] * t.coords[d - 1];
    for (std::size_t i = d - 1; i-- > 0;) {
        angles[i] = std::atan2(std::sqrt(tail_sq), t.coords[i]);
        tail_sq += t.coords[i] * t.coords[i];
    }
    return angles;
}

std::size_t angular_index(const Point& t, std::size_t m) {
    if (m < 1) throw ConfigError("slices per dimension must be >= 1");
    const std::vector<double> angles = hyperspherical_angles(t);
    std::size_t index = 0;
    std::size_t stride = 1;
    for (double phi : angles) {
        auto slice = static_cast<std::size_t>(2.0 * phi / 3.14159265358979323846 *
                                              static_cast<double>(m));
        if (slice >= m) slice = m - 1;
        index += slice * stride;
        stride *= m;
    }
    return index;
}

PartitionAssignment assign_grid(const Dataset& r, std::size_t m) {
    if (m < 1) throw ConfigError("slices per dimension must be >= 1");
    if (r.d < 1) throw DimensionError("grid partitioning needs d >= 1");
    const std::size_t count = checked_pow(m, r.d);
    if (count > kMaxPartitions) {
        throw ConfigError("grid partition count m^d exceeds the supported maximum");
    }
    PartitionAssignment out;
    out.strategy = Strategy::Grid;
    out.partition_count = count;
    out.d = r.d;
    out.normalized = r.normalized;
    out.slices = m;
    out.partition_of.reserve(r.size());
    for (const Point& t : r.points) out.partition_of.push_back(grid_index(t, m));
    return out;
}

PartitionAssignment assign_angular(const Dataset& r, std::size_t m) {
    if (m < 1) throw ConfigError("slices per dimension must be >= 1");
    if (r.d < 2) throw DimensionError("angular partitioning needs d >= 2");
    const std::size_t count = checked_pow(m, r.d - 1);
    if (count > kMaxPartitions) {
        throw ConfigError("angular partition count m^(d-1) exceeds the supported maximum");
    }
    PartitionAssignment out;
    out.strategy = Strategy::Angular;
    out.partition_count = count;
    out.d = r.d;
    out.normalized = r.normalized;
    out.slices = m;
    out.partition_of.reserve(r.size());
    for (const Point& t : r.points) out.partition_of.push_back(angular_index(t, m));
    return out;
}

PartitionAssignment assign_sliced(const Dataset& r, std::size_t p, std::size_t slice_dim) {
    if (p < 1) throw ConfigError("partition count must be >= 1");
    if (!r.empty() && slice_dim >= r.d) {
        throw ConfigError("slice dimension " + std::to_string(slice_dim) +
                          " out of range for d = " + std::to_string(r.d));
    }
    PartitionAssignment out;
    out.strategy = Strategy::Sliced;
    out.partition_count = p;
    out.d = r.d;
    out.normalized = r.normalized;
    out.presorted = true;

    const std::size_t n = r.size();
    out.scan_order.resize(n);
    std::iota(out.scan_order.begin(), out.scan_order.end(), std::size_t{0});
    std::sort(out.scan_order.begin(), out.scan_order.end(),
              [&](std::size_t a, std::size_t b) {
                  const Point& ta = r.points[a];
                  const Point& tb = r.points[b];
                  if (ta.coords[slice_dim] < tb.coords[slice_dim]) return true;
                  if (ta.coords[slice_dim] > tb.coords[slice_dim]) return false;
                  return detail::coords_then_id_less(ta, tb);
              });

    out.partition_of.resize(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        std::size_t index = n > 1 ? rank * p / (n - 1) : 0;
        if (index >= p) index = p - 1;
        out.partition_of[out.scan_order[rank]] = index;
    }
    return out;
}

std::size_t snap_slices(std::size_t target_p, std::size_t k) {
    if (target_p < 1) throw ConfigError("target partition count must be >= 1");
    if (k < 1) throw ConfigError("snap exponent must be >= 1");
    std::size_t hi = 1;
    while (checked_pow(hi, k) < target_p && checked_pow(hi, k) <= kMaxPartitions) ++hi;
    if (hi == 1) return 1;
    if (checked_pow(hi, k) < target_p) return hi;  // capped; assignment will reject
    const std::size_t lo = hi - 1;
    const std::size_t above = checked_pow(hi, k) - target_p;
    const std::size_t below = target_p - checked_pow(lo, k);
    return above < below ? hi : lo;
}

PartitionAssignment make_assignment(const Dataset& r, const PartitionConfig& config) {
    if (config.p < 1) throw ConfigError("partition count must be >= 1");
    switch (config.strategy) {
        case Strategy::Random:
            return assign_random(r, config.p, config.seed);
        case Strategy::Grid: {
            const std::size_t m = config.m > 0 ? config.m : snap_slices(config.p, r.d);
            return assign_grid(r, m);
        }
        case Strategy::Angular: {
            if (r.d < 2) throw DimensionError("angular partitioning needs d >= 2");
            const std::size_t m = config.m > 0 ? config.m : snap_slices(config.p, r.d - 1);
            return assign_angular(r, m);
        }
        case Strategy::Sliced:
            return assign_sliced(r, config.p, config.slice_dim);
    }
    throw ConfigError("unknown partitioning strategy");
}

std::vector<Dataset> split(const Dataset& r, const PartitionAssignment& assignment) {
    std::vector<Dataset> parts(assignment.partition_count);
    for (Dataset& part : parts) {
        part.d = r.d;
        part.normalized = r.normalized;
    }
    std::vector<std::size_t> sizes(assignment.partition_count, 0);
    for (std::size_t idx : assignment.partition_of) ++sizes[idx];
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].points.reserve(sizes[i]);

    if (assignment.scan_order.empty()) {
        for (std::size_t pos = 0; pos < r.size(); ++pos) {
            parts[assignment.partition_of[pos]].points.push_back(r.points[pos]);
        }
    } else {
        for (std::size_t pos : assignment.scan_order) {
            parts[assignment.partition_of[pos]].points.push_back(r.points[pos]);
        }
    }
    return parts;
}

}  // namespace skyline
