#pragma once

// Domain types and dominance primitives. Everything else builds on these.
// Convention: smaller is better on every attribute.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skyline {

struct SkylineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Tuples of unequal dimensionality were compared, or an operation needs d >= 2.
struct DimensionError : SkylineError {
    using SkylineError::SkylineError;
};
// An operation that needs coordinates in [0,1] saw a non-normalized input.
struct NormalizationError : SkylineError {
    using SkylineError::SkylineError;
};
// Invalid run configuration (partition counts, worker counts, flag combos).
struct ConfigError : SkylineError {
    using SkylineError::SkylineError;
};
// Malformed or unusable data (bad coordinates, empty ingestion result).
struct DataError : SkylineError {
    using SkylineError::SkylineError;
};
struct IoError : SkylineError {
    using SkylineError::SkylineError;
};

using PointId = std::int64_t;

// A d-dimensional tuple of non-negative coordinates. Ids are assigned in
// input order (0-based) and act as the universal tie-breaker.
struct Point {
    std::vector<double> coords;
    PointId id = 0;

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t j) const { return coords[j]; }
};

struct Dataset {
    std::vector<Point> points;
    std::size_t d = 0;
    bool normalized = false;  // true iff every coordinate lies in [0,1]

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// An antichain under dominance, sorted by id for deterministic output.
struct SkylineSet {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Builds a Dataset from raw rows: validates that all rows share one
// dimensionality and that every value is finite and >= 0 (and <= 1 when
// `normalized` is set), then assigns ids in row order.
Dataset make_dataset(std::vector<std::vector<double>> rows, bool normalized);

// True iff t[j] <= s[j] for all j and t[j] < s[j] for at least one j.
// Exact comparisons, no epsilon; duplicates never dominate each other.
bool dominates(const Point& t, const Point& s);

// Literal O(N^2) evaluation of the skyline definition. Doubles as the test
// oracle for every other skyline path. Output sorted by id.
SkylineSet skyline_bruteforce(const Dataset& r);

// Tuples of r dominated by no tuple of c. The result is a plain subset of r
// (it need not be an antichain), in r's point order.
Dataset relative_skyline(const Dataset& r, const Dataset& c);

// Hyper-volume of the dominance region of t over [0,1]^d: prod_i (1 - t[i]).
// Requires every coordinate in [0,1].
double dominance_region_volume(const Point& t);

namespace detail {

// Raw dominance test on coordinate arrays; callers guarantee equal length.
inline bool dominates_raw(const double* a, const double* b, std::size_t d) {
    bool strict = false;
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strict = true;
    }
    return strict;
}

// Total order: lexicographic coordinates, then id. If a dominates b then a
// sorts strictly before b, which makes this the tie-breaker of choice for
// every ordering that must be a topological sort w.r.t. dominance.
bool coords_then_id_less(const Point& a, const Point& b);

inline double coord_sum(const Point& t) {
    double s = 0.0;
    for (double v : t.coords) s += v;
    return s;
}

}  // namespace detail

}  // namespace skyline
