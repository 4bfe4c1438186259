#include "skyline/filter.hpp"

#include <algorithm>

#include "skyline/parallel.hpp"
#include "skyline/rng.hpp"
#include "skyline/sequential.hpp"

namespace skyline {

namespace {

// Runs the per-partition candidate pick concurrently, then unions the picks
// in partition order and prunes them to an antichain.
template <typename PickFn>
Representatives select_representatives(const std::vector<Dataset>& partitions,
                                       std::size_t q, std::size_t workers,
                                       RepSelection selection, PickFn pick) {
    if (q < 1) throw ConfigError("representative count q must be >= 1");
    std::vector<std::vector<Point>> picked(partitions.size());
    parallel_for(partitions.size(), workers, [&](std::size_t i) {
        if (!partitions[i].empty()) picked[i] = pick(i, partitions[i]);
    });
    std::vector<Point> candidates;
    for (auto& c : picked) {
        candidates.insert(candidates.end(), c.begin(), c.end());
    }
    Representatives reps;
    reps.selection = selection;
    reps.q = q;
    reps.points = prune_dominated_reps(std::move(candidates));
    return reps;
}

}  // namespace

std::vector<GridCoords> grid_filter(const OccupancyMap& occupancy) {
    std::vector<GridCoords> survivors;
    for (const GridCoords& cell : occupancy.non_empty) {
        bool dominated = false;
        for (const GridCoords& other : occupancy.non_empty) {
            if (grid_dominates(other, cell)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) survivors.push_back(cell);
    }
    return survivors;
}

OccupancyMap occupancy_of(const std::vector<Dataset>& partitions,
                          const PartitionAssignment& assignment) {
    if (assignment.strategy != Strategy::Grid) {
        throw ConfigError("occupancy map requires a grid assignment");
    }
    OccupancyMap occ;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (!partitions[i].empty()) {
            occ.non_empty.push_back(decode_grid_index(i, assignment.slices, assignment.d));
        }
    }
    return occ;
}

Representatives select_representatives_sorted(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::size_t workers) {
    return select_representatives(
        partitions, q, workers, RepSelection::Sorted,
        [q](std::size_t, const Dataset& part) {
            std::vector<const Point*> order;
            order.reserve(part.size());
            for (const Point& t : part.points) order.push_back(&t);
            std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) {
                const double sa = detail::coord_sum(*a);
                const double sb = detail::coord_sum(*b);
                if (sa != sb) return sa < sb;
                return detail::coords_then_id_less(*a, *b);
            });
            const std::size_t take = std::min(q, order.size());
            std::vector<Point> out;
            out.reserve(take);
            for (std::size_t i = 0; i < take; ++i) out.push_back(*order[i]);
            return out;
        });
}

Representatives select_representatives_region(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::size_t workers) {
    for (const Dataset& part : partitions) {
        if (!part.empty() && !part.normalized) {
            throw NormalizationError("region selection requires a normalized dataset");
        }
    }
    return select_representatives(
        partitions, q, workers, RepSelection::Region,
        [q](std::size_t, const Dataset& part) {
            std::vector<std::pair<double, const Point*>> ranked;
            ranked.reserve(part.size());
            for (const Point& t : part.points) {
                ranked.emplace_back(dominance_region_volume(t), &t);
            }
            std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second->id < b.second->id;
            });
            const std::size_t take = std::min(q, ranked.size());
            std::vector<Point> out;
            out.reserve(take);
            for (std::size_t i = 0; i < take; ++i) out.push_back(*ranked[i].second);
            return out;
        });
}

Representatives select_representatives_random(const std::vector<Dataset>& partitions,
                                              std::size_t q, std::uint64_t seed,
                                              std::size_t workers) {
    return select_representatives(
        partitions, q, workers, RepSelection::Random,
        [q, seed](std::size_t i, const Dataset& part) {
            // Per-partition derived seed keeps the draw independent of the
            // scheduling order.
            Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
            std::vector<std::size_t> idx(part.size());
            for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
            const std::size_t take = std::min(q, idx.size());
            // Partial Fisher-Yates: the first `take` slots end up random.
            for (std::size_t k = 0; k < take; ++k) {
                const std::size_t j = k + static_cast<std::size_t>(rng.below(idx.size() - k));
                std::swap(idx[k], idx[j]);
            }
            std::vector<Point> out;
            out.reserve(take);
            for (std::size_t k = 0; k < take; ++k) out.push_back(part.points[idx[k]]);
            return out;
        });
}

std::vector<Point> prune_dominated_reps(std::vector<Point> candidates) {
    Dataset tmp;
    if (!candidates.empty()) tmp.d = candidates.front().dim();
    tmp.points = std::move(candidates);
    SkylineSet pruned = skyline_bruteforce(tmp);
    return std::move(pruned.points);
}

PrefilterResult rep_prefilter(const Dataset& partition, const Representatives& reps) {
    PrefilterResult result;
    if (reps.points.empty()) {
        result.kept = partition;
        return result;
    }
    Dataset rep_set;
    rep_set.d = reps.points.front().dim();
    rep_set.points = reps.points;
    result.kept = relative_skyline(partition, rep_set);
    result.discarded = partition.size() - result.kept.size();
    return result;
}

}  // namespace skyline
