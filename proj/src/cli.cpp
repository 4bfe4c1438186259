#include "skyline/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skyline/core.hpp"
#include "skyline/datagen.hpp"
#include "skyline/engine.hpp"
#include "skyline/io.hpp"

namespace skyline::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GenSpec parse_gen(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 3) {
        throw UsageError("--gen expects 'distribution,N,d', got '" + text + "'");
    }
    GenSpec spec;
    try {
        spec.distribution = parse_distribution(parts[0]);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    try {
        spec.n = std::stoull(parts[1]);
        spec.d = std::stoull(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--gen expects numeric N and d, got '" + text + "'");
    }
    if (spec.d < 1) throw UsageError("--gen needs d >= 1");
    spec.seed = seed;
    return spec;
}

// Named configuration bundles, reproducible with one flag.
void apply_preset(const std::string& name, EngineConfig& config) {
    if (name == "random") {
        config.partition.strategy = Strategy::Random;
        config.filter = FilterKind::None;
        config.merge = MergeKind::Sequential;
    } else if (name == "grid") {
        config.partition.strategy = Strategy::Grid;
        config.filter = FilterKind::None;
        config.merge = MergeKind::Sequential;
    } else if (name == "angular") {
        config.partition.strategy = Strategy::Angular;
        config.filter = FilterKind::None;
        config.merge = MergeKind::Sequential;
    } else if (name == "sliced") {
        config.partition.strategy = Strategy::Sliced;
        config.filter = FilterKind::None;
        config.merge = MergeKind::Sequential;
    } else if (name == "sliced+") {
        config.partition.strategy = Strategy::Sliced;
        config.filter = FilterKind::Representative;
        config.rep_selection = RepSelection::Sorted;
        config.merge = MergeKind::Sequential;
    } else if (name == "angular+") {
        config.partition.strategy = Strategy::Angular;
        config.filter = FilterKind::Representative;
        config.rep_selection = RepSelection::Sorted;
        config.merge = MergeKind::Sequential;
    } else if (name == "noseq") {
        config.partition.strategy = Strategy::Sliced;
        config.filter = FilterKind::None;
        config.merge = MergeKind::NoSeq;
    } else {
        throw UsageError("unknown preset '" + name + "'");
    }
}

std::string sanitize_csv_field(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return s;
}

const char* kCsvHeader =
    "distribution,n,d,seed,repetition,strategy,filter,merge,target_p,"
    "effective_p,workers,rep_q,partition_ms,local_ms,merge_ms,filtered,"
    "union_size,skyline_size,status,message";

std::string csv_row(const std::string& distribution, std::size_t n, std::size_t d,
                    std::uint64_t seed, std::size_t repetition,
                    const EngineConfig& config, const RunResult* result,
                    const std::string& status, const std::string& message) {
    std::ostringstream row;
    row << distribution << ',' << n << ',' << d << ',' << seed << ','
        << repetition << ',' << strategy_name(config.partition.strategy) << ','
        << filter_name(config.filter, config.rep_selection) << ','
        << merge_name(config.merge) << ',' << config.partition.p << ',';
    if (result != nullptr) {
        row << result->effective_p;
    }
    row << ',' << config.workers << ',' << config.rep_q << ',';
    if (result != nullptr) {
        const PhaseMetrics& m = result->metrics;
        row << m.partition_ms << ',' << m.local_ms << ',' << m.merge_ms << ','
            << m.filtered_count << ',' << m.union_size << ',' << m.final_size;
    } else {
        row << ",,,,,";
    }
    row << ',' << status << ',' << sanitize_csv_field(message);
    return row.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text << '\n';
    if (!out) throw IoError("write failed for " + path);
}

bool skylines_equal(const SkylineSet& a, const SkylineSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.points[i].id != b.points[i].id) return false;
        if (a.points[i].coords != b.points[i].coords) return false;
    }
    return true;
}

struct RunFlags {
    std::string input;
    std::string gen;
    std::uint64_t seed = 0;
    std::vector<std::string> columns;
    std::vector<std::string> max_columns;
    std::string preset;
    std::string strategy = "random";
    std::string filter = "none";
    std::string merge = "sequential";
    std::size_t partitions = 8;
    std::size_t slices = 0;
    std::size_t slice_dim = 0;
    std::size_t reps_q = 5;
    std::size_t workers = 1;
    bool oracle = false;
    bool no_timings = false;
    std::string out;
    std::string format = "json";
};

Dataset load_input(const RunFlags& flags, std::string& distribution_label,
                   std::size_t& n, std::size_t& d) {
    if (flags.input.empty() == flags.gen.empty()) {
        throw UsageError("exactly one of --input and --gen is required");
    }
    Dataset data;
    if (!flags.gen.empty()) {
        if (!flags.columns.empty() || !flags.max_columns.empty()) {
            throw UsageError("--columns/--max-columns apply to --input only");
        }
        const GenSpec spec = parse_gen(flags.gen, flags.seed);
        distribution_label = distribution_name(spec.distribution);
        data = generate(spec);
    } else {
        distribution_label = "file";
        std::vector<Direction> directions;
        if (!flags.max_columns.empty()) {
            if (flags.columns.empty()) {
                throw UsageError("--max-columns requires --columns");
            }
            directions.assign(flags.columns.size(), Direction::Min);
            for (const std::string& name : flags.max_columns) {
                const auto it =
                    std::find(flags.columns.begin(), flags.columns.end(), name);
                if (it == flags.columns.end()) {
                    throw UsageError("--max-columns entry '" + name +
                                     "' is not in --columns");
                }
                directions[static_cast<std::size_t>(it - flags.columns.begin())] =
                    Direction::Max;
            }
        }
        data = ingest_csv(flags.input, flags.columns, directions);
    }
    n = data.size();
    d = data.d;
    return data;
}

EngineConfig build_config(const RunFlags& flags, const CLI::App* cmd) {
    EngineConfig config;
    config.partition.p = flags.partitions;
    config.partition.m = flags.slices;
    config.partition.seed = flags.seed;
    config.partition.slice_dim = flags.slice_dim;
    config.rep_q = flags.reps_q;
    config.workers = flags.workers;
    config.seed = flags.seed;
    if (!flags.preset.empty()) apply_preset(flags.preset, config);
    try {
        // Explicit flags override the preset.
        if (flags.preset.empty() || cmd->count("--strategy") > 0) {
            config.partition.strategy = parse_strategy(flags.strategy);
        }
        if (flags.preset.empty() || cmd->count("--filter") > 0) {
            parse_filter(flags.filter, config.filter, config.rep_selection);
        }
        if (flags.preset.empty() || cmd->count("--merge") > 0) {
            config.merge = parse_merge(flags.merge);
        }
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    return config;
}

int do_generate(const std::string& gen, std::uint64_t seed, const std::string& out) {
    const GenSpec spec = parse_gen(gen, seed);
    const Dataset data = generate(spec);
    write_csv(data, out);
    std::cout << "N=" << spec.n << " d=" << spec.d << " seed=" << spec.seed
              << " distribution=" << distribution_name(spec.distribution)
              << " -> " << out << '\n';
    return 0;
}

int do_run(const RunFlags& flags, const CLI::App* cmd) {
    std::string distribution_label;
    std::size_t n = 0;
    std::size_t d = 0;
    const Dataset data = load_input(flags, distribution_label, n, d);
    const EngineConfig config = build_config(flags, cmd);

    const RunResult result = run(data, config);

    std::optional<bool> oracle_match;
    if (flags.oracle) {
        oracle_match = skylines_equal(result.skyline, skyline_bruteforce(data));
    }

    if (flags.format == "json") {
        write_text(flags.out, run_result_to_json(result, !flags.no_timings, oracle_match));
    } else if (flags.format == "csv") {
        std::string text = std::string(kCsvHeader) + '\n' +
                           csv_row(distribution_label, n, d, flags.seed, 0, config,
                                   &result, "ok", "");
        write_text(flags.out, text);
    } else {
        throw UsageError("unknown format '" + flags.format + "'");
    }
    if (!flags.out.empty()) {
        std::cout << "skyline_size=" << result.metrics.final_size
                  << " union_size=" << result.metrics.union_size
                  << " filtered=" << result.metrics.filtered_count
                  << " effective_p=" << result.effective_p;
        if (oracle_match.has_value()) {
            std::cout << " oracle_match=" << (*oracle_match ? "true" : "false");
        }
        std::cout << " -> " << flags.out << '\n';
    }
    return 0;
}

struct BenchFlags {
    std::vector<std::string> dists{"anticorrelated"};
    std::vector<std::size_t> ns{100000};
    std::vector<std::size_t> ds{4};
    std::vector<std::string> strategies{"sliced"};
    std::vector<std::string> filters{"none"};
    std::vector<std::string> merges{"sequential"};
    std::vector<std::size_t> partitions{8};
    std::vector<std::size_t> workers{1};
    std::size_t repetitions = 1;
    std::size_t reps_q = 5;
    std::uint64_t seed = 0;
    std::string out;
};

int do_bench(const BenchFlags& flags) {
    std::ostringstream table;
    table << kCsvHeader << '\n';

    Dataset data;
    std::string cached_key;
    for (const std::string& dist_name : flags.dists) {
        const Distribution dist = parse_distribution(dist_name);
        for (std::size_t n : flags.ns) {
            for (std::size_t d : flags.ds) {
                for (std::size_t rep = 0; rep < flags.repetitions; ++rep) {
                    // One dataset per (distribution, n, d, repetition) cell
                    // block, so strategies compete on identical data.
                    const std::uint64_t data_seed = flags.seed + rep;
                    const std::string key = dist_name + '/' + std::to_string(n) + '/' +
                                            std::to_string(d) + '/' +
                                            std::to_string(data_seed);
                    if (key != cached_key) {
                        data = generate(GenSpec{dist, n, d, data_seed});
                        cached_key = key;
                    }
                    for (const std::string& strategy : flags.strategies) {
                        for (const std::string& filter : flags.filters) {
                            for (const std::string& merge : flags.merges) {
                                for (std::size_t p : flags.partitions) {
                                    for (std::size_t w : flags.workers) {
                                        EngineConfig config;
                                        config.partition.p = p;
                                        config.partition.seed = data_seed;
                                        config.rep_q = flags.reps_q;
                                        config.workers = w;
                                        config.seed = data_seed;
                                        std::string status = "ok";
                                        std::string message;
                                        const RunResult* result_ptr = nullptr;
                                        RunResult result;
                                        try {
                                            config.partition.strategy =
                                                parse_strategy(strategy);
                                            parse_filter(filter, config.filter,
                                                         config.rep_selection);
                                            config.merge = parse_merge(merge);
                                            result = run(data, config);
                                            result_ptr = &result;
                                        } catch (const SkylineError& e) {
                                            status = "error";
                                            message = e.what();
                                        }
                                        table << csv_row(dist_name, n, d, data_seed,
                                                         rep, config, result_ptr,
                                                         status, message)
                                              << '\n';
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::string text = table.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    write_text(flags.out, text);
    return 0;
}

}  // namespace

int run_main(int argc, const char* const* argv) {
    CLI::App app{"Parallel skyline computation: partitioning strategies, filtering "
                 "optimizations, and a fully parallel merge."};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic dataset as CSV");
    std::string gen_spec;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen_cmd->add_option("--gen", gen_spec, "distribution,N,d (e.g. anticorrelated,100000,4)")
        ->required();
    gen_cmd->add_option("--seed", gen_seed, "Generator seed");
    gen_cmd->add_option("--out", gen_out, "Output CSV path")->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "Compute one skyline and report metrics");
    RunFlags rf;
    run_cmd->add_option("--input", rf.input, "Input CSV (header row, numeric columns)");
    run_cmd->add_option("--gen", rf.gen, "Generate the input: distribution,N,d");
    run_cmd->add_option("--seed", rf.seed, "Seed for generation and randomized steps");
    run_cmd->add_option("--columns", rf.columns, "Columns to ingest, in order")
        ->delimiter(',');
    run_cmd->add_option("--max-columns", rf.max_columns,
                        "Subset of --columns where larger raw values are better")
        ->delimiter(',');
    run_cmd->add_option("--preset", rf.preset,
                        "random|grid|angular|sliced|sliced+|angular+|noseq");
    run_cmd->add_option("--strategy", rf.strategy, "random|grid|angular|sliced");
    run_cmd->add_option("--filter", rf.filter,
                        "none|grid|rep-sorted|rep-region|rep-random");
    run_cmd->add_option("--merge", rf.merge, "sequential|noseq");
    run_cmd->add_option("--partitions", rf.partitions,
                        "Target partition count (snapped for grid/angular)");
    run_cmd->add_option("--slices", rf.slices,
                        "Slices per dimension for grid/angular (overrides snapping)");
    run_cmd->add_option("--slice-dim", rf.slice_dim, "Sort dimension for sliced");
    run_cmd->add_option("--reps-q", rf.reps_q, "Representatives per partition");
    run_cmd->add_option("--workers", rf.workers, "Worker threads");
    run_cmd->add_flag("--oracle", rf.oracle,
                      "Also run the brute-force oracle and report oracle_match");
    run_cmd->add_flag("--no-timings", rf.no_timings,
                      "Zero the timing fields for byte-reproducible output");
    run_cmd->add_option("--out", rf.out, "Output path (default: stdout)");
    run_cmd->add_option("--format", rf.format, "json|csv");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Sweep a configuration grid, one CSV row per run");
    BenchFlags bf;
    bench_cmd->add_option("--dist", bf.dists, "Distributions")->delimiter(',');
    bench_cmd->add_option("--n", bf.ns, "Dataset sizes")->delimiter(',');
    bench_cmd->add_option("--d", bf.ds, "Dimensionalities")->delimiter(',');
    bench_cmd->add_option("--strategy", bf.strategies, "Strategies")->delimiter(',');
    bench_cmd->add_option("--filter", bf.filters, "Filters")->delimiter(',');
    bench_cmd->add_option("--merge", bf.merges, "Merge modes")->delimiter(',');
    bench_cmd->add_option("--partitions", bf.partitions, "Target partition counts")
        ->delimiter(',');
    bench_cmd->add_option("--workers", bf.workers, "Worker thread counts")
        ->delimiter(',');
    bench_cmd->add_option("--repetitions", bf.repetitions, "Repetitions per cell");
    bench_cmd->add_option("--reps-q", bf.reps_q, "Representatives per partition");
    bench_cmd->add_option("--seed", bf.seed, "Base seed; repetition r uses seed+r");
    bench_cmd->add_option("--out", bf.out, "Output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) return do_generate(gen_spec, gen_seed, gen_out);
        if (run_cmd->parsed()) return do_run(rf, run_cmd);
        if (bench_cmd->parsed()) return do_bench(bf);
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const SkylineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace skyline::cli
