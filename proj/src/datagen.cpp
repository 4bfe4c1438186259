#include "skyline/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "skyline/rng.hpp"

namespace skyline {

namespace {

std::vector<double> draw_uniform(Rng& rng, std::size_t d) {
    std::vector<double> coords(d);
    for (double& v : coords) v = rng.uniform01();
    return coords;
}

std::vector<double> draw_correlated(Rng& rng, std::size_t d) {
    const double base = rng.uniform01();
    std::vector<double> coords(d);
    for (double& v : coords) {
        do {
            v = base + rng.normal(0.0, 0.05);
        } while (v < 0.0 || v > 1.0);
    }
    return coords;
}

std::vector<double> draw_anticorrelated(Rng& rng, std::size_t d) {
    double level;
    do {
        level = rng.normal(0.5, 0.05);
    } while (level < 0.0 || level > 1.0);
    std::vector<double> coords(d);
    for (;;) {
        double sum = 0.0;
        for (double& v : coords) {
            v = rng.uniform01();
            sum += v;
        }
        if (sum == 0.0) continue;
        const double scale = level * static_cast<double>(d) / sum;
        bool in_range = true;
        for (double& v : coords) {
            v *= scale;
            if (v > 1.0) {
                in_range = false;
                break;
            }
        }
        if (in_range) return coords;
    }
}

// Min-max rescale each column to [0,1] in place; constant columns become 0.
void normalize_columns(std::vector<std::vector<double>>& rows, std::size_t d) {
    if (rows.empty()) return;
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], row[j]);
            hi[j] = std::max(hi[j], row[j]);
        }
    }
    for (auto& row : rows) {
        for (std::size_t j = 0; j < d; ++j) {
            const double range = hi[j] - lo[j];
            row[j] = range > 0.0 ? (row[j] - lo[j]) / range : 0.0;
            // Guard against rounding drift at the upper boundary.
            if (row[j] > 1.0) row[j] = 1.0;
        }
    }
}

bool parse_field(std::string_view field, double& out) {
    // Trim blanks and a trailing CR from Windows line endings.
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() &&
           (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
        field.remove_suffix(1);
    }
    if (field.empty()) return false;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

}  // namespace

Dataset generate(const GenSpec& spec) {
    if (spec.d < 1) throw ConfigError("dimensionality must be >= 1");
    Rng rng(spec.seed);
    Dataset out;
    out.d = spec.d;
    out.normalized = true;
    out.points.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::vector<double> coords;
        switch (spec.distribution) {
            case Distribution::Uniform:
                coords = draw_uniform(rng, spec.d);
                break;
            case Distribution::Correlated:
                coords = draw_correlated(rng, spec.d);
                break;
            case Distribution::Anticorrelated:
                coords = draw_anticorrelated(rng, spec.d);
                break;
        }
        out.points.push_back(Point{std::move(coords), static_cast<PointId>(i)});
    }
    return out;
}

Dataset normalize(const Dataset& r) {
    Dataset out;
    out.d = r.d;
    out.normalized = true;
    if (r.empty()) return out;
    std::vector<std::vector<double>> rows;
    rows.reserve(r.size());
    for (const Point& t : r.points) rows.push_back(t.coords);
    normalize_columns(rows, r.d);
    out.points.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.points.push_back(Point{std::move(rows[i]), r.points[i].id});
    }
    return out;
}

Dataset ingest_csv(const std::string& path, const std::vector<std::string>& columns,
                   const std::vector<Direction>& directions) {
    if (!directions.empty() && !columns.empty() && directions.size() != columns.size()) {
        throw ConfigError("directions must be empty or match the selected columns");
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty file: " + path);
    const std::vector<std::string> raw_header = split_line(line);
    std::vector<std::string> header;
    header.reserve(raw_header.size());
    for (const std::string& h : raw_header) header.push_back(trim(h));

    std::vector<std::size_t> selected;
    if (columns.empty()) {
        selected.resize(header.size());
        for (std::size_t j = 0; j < header.size(); ++j) selected[j] = j;
    } else {
        for (const std::string& name : columns) {
            const auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) {
                throw ConfigError("unknown column '" + name + "' in " + path);
            }
            selected.push_back(static_cast<std::size_t>(it - header.begin()));
        }
    }
    if (!directions.empty() && directions.size() != selected.size()) {
        throw ConfigError("directions must be empty or match the selected columns");
    }

    const std::size_t d = selected.size();
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        std::vector<double> row(d);
        bool ok = true;
        for (std::size_t j = 0; j < d; ++j) {
            if (selected[j] >= fields.size() || !parse_field(fields[selected[j]], row[j])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;  // missing or non-numeric value: drop the row
        for (std::size_t j = 0; j < d; ++j) {
            if (j < directions.size() && directions[j] == Direction::Max) {
                row[j] = -row[j];
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("no usable rows in " + path);

    normalize_columns(rows, d);
    return make_dataset(std::move(rows), true);
}

void write_csv(const Dataset& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    for (std::size_t j = 0; j < r.d; ++j) {
        if (j > 0) out << ',';
        out << 'd' << j;
    }
    out << '\n';
    char buf[64];
    for (const Point& t : r.points) {
        for (std::size_t j = 0; j < r.d; ++j) {
            if (j > 0) out << ',';
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t.coords[j]);
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace skyline
