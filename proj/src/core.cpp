#include "skyline/core.hpp"

#include <algorithm>
#include <cmath>

namespace skyline {

namespace detail {

bool coords_then_id_less(const Point& a, const Point& b) {
    const std::size_t d = a.coords.size();
    for (std::size_t j = 0; j < d; ++j) {
        if (a.coords[j] < b.coords[j]) return true;
        if (a.coords[j] > b.coords[j]) return false;
    }
    return a.id < b.id;
}

}  // namespace detail

Dataset make_dataset(std::vector<std::vector<double>> rows, bool normalized) {
    Dataset out;
    out.normalized = normalized;
    out.d = rows.empty() ? 0 : rows.front().size();
    out.points.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        if (row.size() != out.d) {
            throw DataError("row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " values, expected " +
                            std::to_string(out.d));
        }
        for (double v : row) {
            if (!std::isfinite(v) || v < 0.0) {
                throw DataError("coordinate must be finite and >= 0, got " +
                                std::to_string(v) + " in row " + std::to_string(i));
            }
            if (normalized && v > 1.0) {
                throw DataError("normalized dataset has coordinate > 1 in row " +
                                std::to_string(i));
            }
        }
        out.points.push_back(Point{std::move(row), static_cast<PointId>(i)});
    }
    return out;
}

bool dominates(const Point& t, const Point& s) {
    if (t.dim() != s.dim()) {
        throw DimensionError("dominance test on " + std::to_string(t.dim()) +
                             "-dim vs " + std::to_string(s.dim()) + "-dim tuples");
    }
    return detail::dominates_raw(t.coords.data(), s.coords.data(), t.dim());
}

SkylineSet skyline_bruteforce(const Dataset& r) {
    SkylineSet out;
    const auto& pts = r.points;
    for (const Point& t : pts) {
        bool dominated = false;
        for (const Point& s : pts) {
            if (&s == &t) continue;
            if (detail::dominates_raw(s.coords.data(), t.coords.data(), t.dim())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.points.push_back(t);
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const Point& a, const Point& b) { return a.id < b.id; });
    return out;
}

Dataset relative_skyline(const Dataset& r, const Dataset& c) {
    Dataset out;
    out.d = r.d;
    out.normalized = r.normalized;
    if (r.empty() || c.empty()) {
        out.points = r.points;
        return out;
    }
    if (r.d != c.d) {
        throw DimensionError("relative skyline over " + std::to_string(r.d) +
                             "-dim vs " + std::to_string(c.d) + "-dim relations");
    }
    // Scan comparison tuples in ascending coordinate-sum order: a dominator
    // never has a larger sum, so the scan can stop early. Equal sums must
    // still be scanned (rounding can equalize the sums of a dominating pair).
    std::vector<std::pair<double, const Point*>> ranked;
    ranked.reserve(c.size());
    for (const Point& s : c.points) ranked.emplace_back(detail::coord_sum(s), &s);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::size_t d = r.d;
    for (const Point& t : r.points) {
        const double sum_t = detail::coord_sum(t);
        bool dominated = false;
        for (const auto& [sum_s, s] : ranked) {
            if (sum_s > sum_t) break;
            if (detail::dominates_raw(s->coords.data(), t.coords.data(), d)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.points.push_back(t);
    }
    return out;
}

double dominance_region_volume(const Point& t) {
    double volume = 1.0;
    for (double v : t.coords) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw NormalizationError(
                "dominance region volume needs coordinates in [0,1], got " +
                std::to_string(v));
        }
        volume *= 1.0 - v;
    }
    return volume;
}

}  // namespace skyline
