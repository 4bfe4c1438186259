#include "skyline/sequential.hpp"

#include <algorithm>

namespace skyline {

double score(Scoring f, const Point& t) {
    switch (f) {
        case Scoring::Sum:
            return detail::coord_sum(t);
        case Scoring::VolumeComplement: {
            double volume = 1.0;
            for (double v : t.coords) volume *= 1.0 - v;
            return 1.0 - volume;
        }
    }
    throw ConfigError("unknown scoring function");
}

namespace detail {

SkylineSet sfs_scan(const std::vector<const Point*>& ordered,
                    const WindowObserver& observe) {
    std::vector<const Point*> window;
    for (const Point* t : ordered) {
        bool dominated = false;
        for (const Point* u : window) {
            if (dominates_raw(u->coords.data(), t->coords.data(), t->dim())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            window.push_back(t);
            if (observe) observe(window);
        }
    }
    SkylineSet out;
    out.points.reserve(window.size());
    for (const Point* t : window) out.points.push_back(*t);
    std::sort(out.points.begin(), out.points.end(),
              [](const Point& a, const Point& b) { return a.id < b.id; });
    return out;
}

}  // namespace detail

SkylineSet sfs(const Dataset& r, Scoring f) {
    std::vector<std::pair<double, const Point*>> ranked;
    ranked.reserve(r.size());
    for (const Point& t : r.points) ranked.emplace_back(score(f, t), &t);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return detail::coords_then_id_less(*a.second, *b.second);
    });
    std::vector<const Point*> ordered;
    ordered.reserve(ranked.size());
    for (const auto& [s, t] : ranked) ordered.push_back(t);
    return detail::sfs_scan(ordered);
}

SkylineSet sfs_presorted(const Dataset& r) {
    std::vector<const Point*> ordered;
    ordered.reserve(r.size());
    for (const Point& t : r.points) ordered.push_back(&t);
    return detail::sfs_scan(ordered);
}

}  // namespace skyline
