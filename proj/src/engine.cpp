#include "skyline/engine.hpp"

#include <algorithm>
#include <chrono>

#include "skyline/parallel.hpp"
#include "skyline/sequential.hpp"

namespace skyline {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate(const Dataset& r, const EngineConfig& config) {
    if (config.workers < 1) throw ConfigError("worker count must be >= 1");
    if (config.partition.p < 1) throw ConfigError("partition count must be >= 1");
    if (config.filter == FilterKind::GridFilter &&
        config.partition.strategy != Strategy::Grid) {
        throw ConfigError("grid filtering requires the grid partitioning strategy");
    }
    if (config.filter == FilterKind::Representative && config.rep_q < 1) {
        throw ConfigError("representative count q must be >= 1");
    }
    if (config.partition.strategy == Strategy::Angular && !r.empty() && r.d < 2) {
        throw DimensionError("angular partitioning needs d >= 2");
    }
}

void sort_by_id(std::vector<Point>& points) {
    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.id < b.id; });
}

}  // namespace

LocalSkylines compute_local_skylines(const std::vector<Dataset>& partitions,
                                     const Representatives* reps,
                                     const std::vector<bool>& presorted,
                                     std::size_t workers) {
    LocalSkylines out;
    out.locals.resize(partitions.size());
    std::vector<std::size_t> discarded(partitions.size(), 0);
    parallel_for(partitions.size(), workers, [&](std::size_t i) {
        if (partitions[i].empty()) return;
        const bool scan_only = i < presorted.size() && presorted[i];
        if (reps != nullptr) {
            PrefilterResult pre = rep_prefilter(partitions[i], *reps);
            discarded[i] = pre.discarded;
            // The prefilter keeps the partition's order, so a topological
            // order stays topological.
            out.locals[i] = scan_only ? sfs_presorted(pre.kept) : sfs(pre.kept);
        } else {
            out.locals[i] = scan_only ? sfs_presorted(partitions[i]) : sfs(partitions[i]);
        }
    });
    for (std::size_t n : discarded) out.filtered += n;
    return out;
}

SkylineSet merge_sequential(const std::vector<SkylineSet>& locals) {
    Dataset pool;
    for (const SkylineSet& u : locals) {
        if (pool.d == 0 && !u.empty()) pool.d = u.points.front().dim();
        pool.points.insert(pool.points.end(), u.points.begin(), u.points.end());
    }
    return sfs(pool);
}

Dataset potential_dominators(std::size_t i, const std::vector<SkylineSet>& locals,
                             const PartitionAssignment& assignment) {
    if (i >= locals.size()) throw ConfigError("partition index out of range");
    Dataset pd;
    pd.d = assignment.d;
    pd.normalized = assignment.normalized;

    auto add_local = [&](std::size_t j) {
        pd.points.insert(pd.points.end(), locals[j].points.begin(),
                         locals[j].points.end());
    };

    switch (assignment.strategy) {
        case Strategy::Random:
        case Strategy::Angular:
            // No dominance relationship between partitions: the only sound
            // choice is every other local skyline.
            for (std::size_t j = 0; j < locals.size(); ++j) {
                if (j != i) add_local(j);
            }
            break;
        case Strategy::Grid: {
            const GridCoords mine =
                decode_grid_index(i, assignment.slices, assignment.d);
            for (std::size_t j = 0; j < locals.size(); ++j) {
                if (j == i || locals[j].empty()) continue;
                const GridCoords other =
                    decode_grid_index(j, assignment.slices, assignment.d);
                if (weak_grid_dominates(other, mine)) add_local(j);
            }
            break;
        }
        case Strategy::Sliced:
            for (std::size_t j = 0; j < i; ++j) add_local(j);
            break;
        default:
            throw ConfigError("unknown partitioning strategy");
    }
    sort_by_id(pd.points);
    return pd;
}

SkylineSet merge_noseq(const std::vector<SkylineSet>& locals,
                       const PartitionAssignment& assignment,
                       std::size_t workers) {
    std::vector<Dataset> survivors(locals.size());
    parallel_for(locals.size(), workers, [&](std::size_t i) {
        if (locals[i].empty()) return;
        Dataset u_i;
        u_i.d = assignment.d;
        u_i.normalized = assignment.normalized;
        u_i.points = locals[i].points;
        survivors[i] = relative_skyline(u_i, potential_dominators(i, locals, assignment));
    });
    SkylineSet out;
    for (const Dataset& s : survivors) {
        out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    }
    sort_by_id(out.points);
    return out;
}

RunResult run(const Dataset& r, const EngineConfig& config) {
    validate(r, config);

    RunResult result;
    result.config = config;
    result.input_size = r.size();
    result.input_dim = r.d;

    auto t_partition = Clock::now();
    const PartitionAssignment assignment = make_assignment(r, config.partition);
    std::vector<Dataset> partitions = split(r, assignment);
    result.effective_p = assignment.partition_count;

    std::size_t filtered = 0;
    if (config.filter == FilterKind::GridFilter) {
        const std::vector<GridCoords> survivors =
            grid_filter(occupancy_of(partitions, assignment));
        std::vector<bool> keep(partitions.size(), false);
        for (const GridCoords& cell : survivors) {
            keep[encode_grid_coords(cell, assignment.slices)] = true;
        }
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            if (!keep[i] && !partitions[i].empty()) {
                filtered += partitions[i].size();
                partitions[i].points.clear();
            }
        }
    }
    result.metrics.partition_ms = ms_since(t_partition);

    auto t_local = Clock::now();
    std::optional<Representatives> reps;
    if (config.filter == FilterKind::Representative) {
        switch (config.rep_selection) {
            case RepSelection::Sorted:
                reps = select_representatives_sorted(partitions, config.rep_q,
                                                     config.workers);
                break;
            case RepSelection::Region:
                reps = select_representatives_region(partitions, config.rep_q,
                                                     config.workers);
                break;
            case RepSelection::Random:
                reps = select_representatives_random(partitions, config.rep_q,
                                                     config.seed, config.workers);
                break;
        }
    }
    const std::vector<bool> presorted(partitions.size(), assignment.presorted);
    LocalSkylines locals = compute_local_skylines(
        partitions, reps ? &*reps : nullptr, presorted, config.workers);
    filtered += locals.filtered;
    result.metrics.local_ms = ms_since(t_local);

    auto t_merge = Clock::now();
    result.skyline = config.merge == MergeKind::Sequential
                         ? merge_sequential(locals.locals)
                         : merge_noseq(locals.locals, assignment, config.workers);
    result.metrics.merge_ms = ms_since(t_merge);

    result.metrics.local_skyline_sizes.reserve(locals.locals.size());
    for (const SkylineSet& u : locals.locals) {
        result.metrics.local_skyline_sizes.push_back(u.size());
        result.metrics.union_size += u.size();
    }
    result.metrics.filtered_count = filtered;
    result.metrics.final_size = result.skyline.size();
    return result;
}

}  // namespace skyline
