#pragma once

// Synthetic dataset generation (uniform / correlated / anticorrelated),
// min-max normalization, and CSV ingestion.

#include <cstdint>
#include <string>
#include <vector>

#include "skyline/core.hpp"

namespace skyline {

enum class Distribution {
    Uniform,
    Correlated,
    Anticorrelated,
};

struct GenSpec {
    Distribution distribution = Distribution::Uniform;
    std::size_t n = 0;
    std::size_t d = 1;
    std::uint64_t seed = 0;
};

// N points in [0,1]^d, marked normalized, a pure function of the spec.
//   Uniform:        i.i.d. uniform coordinates.
//   Correlated:     base b ~ U[0,1]; each coordinate b + N(0, 0.05),
//                   resampled per coordinate until inside [0,1].
//   Anticorrelated: plane level c ~ N(0.5, 0.05) resampled into [0,1];
//                   coordinates drawn uniform, rescaled so their mean is
//                   exactly c, the whole point redrawn if any coordinate
//                   leaves [0,1].
Dataset generate(const GenSpec& spec);

// Per-column min-max rescale to [0,1]; constant columns map to 0. The result
// is marked normalized. Empty input yields an empty result.
Dataset normalize(const Dataset& r);

// Whether smaller or larger raw values are preferable in a CSV column.
// Max-direction columns are negated before normalization so that
// smaller-is-better holds uniformly afterwards.
enum class Direction {
    Min,
    Max,
};

// Parses a comma-separated file with a header row. `columns` selects and
// orders the attributes (empty = all columns in header order); `directions`
// must be empty (all Min) or match `columns`. Rows with a missing or
// non-numeric value in a selected column are dropped. The result is
// normalized.
Dataset ingest_csv(const std::string& path, const std::vector<std::string>& columns,
                   const std::vector<Direction>& directions);

// Writes the dataset in the same dialect ingest_csv reads, with header
// columns d0..d{d-1} and round-trip-exact values.
void write_csv(const Dataset& r, const std::string& path);

}  // namespace skyline
