#pragma once

// Sort Filter Skyline: the sequential kernel used standalone and per
// partition by the parallel engine.

#include <functional>

#include "skyline/core.hpp"

namespace skyline {

// Monotone scoring functions usable as the SFS presort key.
// Sum is sum of coordinates; VolumeComplement is 1 - prod(1 - t[i]) and is
// monotone only on [0,1] coordinates, i.e. on normalized data.
enum class Scoring {
    Sum,
    VolumeComplement,
};

double score(Scoring f, const Point& t);

// Sorts r ascending by (f, lexicographic coords, id) and runs the
// scan-and-window loop. The coordinate tie-breaker keeps the order
// topological w.r.t. dominance even where f alone ties (duplicates,
// boundary coordinates under VolumeComplement).
SkylineSet sfs(const Dataset& r, Scoring f = Scoring::Sum);

// Scan-and-window loop without the sort. Precondition (unchecked): r's point
// sequence is a topological sort w.r.t. dominance, i.e. later points never
// dominate earlier ones.
SkylineSet sfs_presorted(const Dataset& r);

namespace detail {

// Observer over the window after each appended tuple; test hook.
using WindowObserver = std::function<void(const std::vector<const Point*>&)>;

// The window loop shared by sfs and sfs_presorted. `ordered` must be a
// topological sort w.r.t. dominance. Returns surviving points sorted by id.
SkylineSet sfs_scan(const std::vector<const Point*>& ordered,
                    const WindowObserver& observe = {});

}  // namespace detail

}  // namespace skyline
