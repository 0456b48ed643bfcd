// Subcommand implementations behind the psmoa CLI. main() only parses flags
// into Options and dispatches here; tests drive these functions directly.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "psmoa/artifacts.hpp"
#include "psmoa/daycycle.hpp"
#include "psmoa/policy_io.hpp"
#include "psmoa/psmoa.hpp"

namespace psmoa::cli {

namespace fs = std::filesystem;

struct Options {
    std::string scale = "small";
    std::string scenario_file;  // when set, overrides --scale generation
    std::uint64_t scenario_seed = 42;
    std::string policy_file;
    std::string schedule_file;
    std::string algorithm = "psmoa";
    int pop_size = 100;
    int generations = 200;
    std::vector<std::uint64_t> seeds;  // per-command defaults applied in load
    std::string out_dir = "out";
    std::string format = "csv";
    double time_budget_seconds = 600.0;
    std::string command_line;  // echoed into the manifest
};

struct Inputs {
    Scenario scenario;
    PolicySpec policy;
    std::optional<PolicySchedule> schedule;
    std::string scenario_text;
    std::string policy_text;
    std::string schedule_text;
};

// Thrown for bad flags/files; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Inputs load_inputs(const Options& opt, std::uint64_t scenario_seed) {
    Inputs in;
    try {
        if (!opt.scenario_file.empty()) {
            const std::string text = read_file(opt.scenario_file);
            in.scenario = scenario_from_string(text);
        } else {
            in.scenario = generate_scenario(scale_from_string(opt.scale), scenario_seed);
        }
        in.scenario_text = scenario_to_string(in.scenario);
        if (!opt.policy_file.empty()) {
            in.policy = policy_from_string(read_file(opt.policy_file));
        }
        in.policy_text = policy_to_string(in.policy);
        if (!opt.schedule_file.empty()) {
            in.schedule = schedule_from_string(read_file(opt.schedule_file));
            in.schedule_text = schedule_to_string(*in.schedule);
        }
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return in;
}

inline EvolutionConfig make_config(const Options& opt, Algorithm algorithm, std::uint64_t seed) {
    EvolutionConfig config;
    config.algorithm = algorithm;
    config.population_size = opt.pop_size;
    config.max_generations = opt.generations;
    config.seed = seed;
    try {
        validate(config);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return config;
}

inline Json build_manifest(const Options& opt, const std::string& command, const Inputs& in,
                           const std::vector<std::uint64_t>& seeds,
                           const std::vector<std::string>& artifacts, Json parameters) {
    Json m;
    m["tool_version"] = kToolVersion;
    m["command"] = command;
    m["command_line"] = opt.command_line;
    std::string config_blob = command + "|" + opt.algorithm + "|" + std::to_string(opt.pop_size) +
                              "|" + std::to_string(opt.generations) + "|" + opt.format;
    m["config_hash"] = fnv1a_hex(config_blob);
    m["scenario_hash"] = fnv1a_hex(in.scenario_text);
    m["policy_hash"] = fnv1a_hex(in.policy_text);
    if (!in.schedule_text.empty()) m["schedule_hash"] = fnv1a_hex(in.schedule_text);
    m["seeds"] = seeds;
    m["artifacts"] = artifacts;
    m["parameters"] = std::move(parameters);
    return m;
}

// Honors PSMOA_THREADS as a cap on worker count; work items are claimed by
// index so results land deterministically regardless of completion order.
inline int thread_cap(std::size_t jobs) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (const char* env = std::getenv("PSMOA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < threads) threads = static_cast<unsigned>(v);
    }
    return static_cast<int>(std::min<std::size_t>(threads, jobs));
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const int workers = thread_cap(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// ---- run -------------------------------------------------------------------

inline int cmd_run(Options opt) {
    if (opt.seeds.empty()) opt.seeds = {42};
    Algorithm algorithm;
    try {
        algorithm = algorithm_from_string(opt.algorithm);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    const std::uint64_t seed = opt.seeds.front();
    const Inputs in = load_inputs(opt, seed);
    const EvolutionConfig config = make_config(opt, algorithm, seed);

    const std::string front_name = opt.format == "json" ? "front.json" : "front.csv";
    const std::vector<std::string> artifacts = {"manifest.json", front_name, "trace.jsonl"};
    Json params;
    params["algorithm"] = opt.algorithm;
    params["population_size"] = opt.pop_size;
    params["generations"] = opt.generations;
    params["scale"] = opt.scenario_file.empty() ? opt.scale : "file";
    params["format"] = opt.format;
    atomic_write(fs::path(opt.out_dir) / "manifest.json",
                 build_manifest(opt, "run", in, opt.seeds, artifacts, std::move(params)).dump(2) +
                     "\n");

    const RunResult result = run_algorithm(in.scenario, in.policy, in.schedule, config);
    if (opt.format == "json")
        atomic_write(fs::path(opt.out_dir) / front_name, front_json(result.archive).dump(2) + "\n");
    else
        atomic_write(fs::path(opt.out_dir) / front_name, front_csv(result.archive));
    atomic_write(fs::path(opt.out_dir) / "trace.jsonl", trace_jsonl(result.trace, algorithm));
    return 0;
}

// ---- compare ---------------------------------------------------------------

inline double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct MetricRow {
    std::string algorithm;
    std::uint64_t seed = 0;
    double hv = 0.0, gd = 0.0, igd = 0.0;
};

// Hypervolume over the subset of points that dominate the reference point;
// points beyond it contribute nothing by construction.
inline double hypervolume_clipped(const FrontArchive& archive, const std::vector<double>& ref) {
    FrontArchive clipped;
    for (const auto& p : archive.points) {
        bool ok = true;
        for (std::size_t k = 0; k < ref.size(); ++k)
            if (p[k] > ref[k]) { ok = false; break; }
        if (ok) clipped.insert(p);
    }
    if (clipped.points.empty()) return 0.0;
    return hypervolume(clipped, ref);
}

struct CompareOutcome {
    std::vector<MetricRow> normalized;
    std::vector<MetricRow> raw;
    Json summary;
};

inline CompareOutcome compare_algorithms(const Scenario& scenario,
                                         const std::vector<std::uint64_t>& seeds,
                                         const Options& opt) {
    const std::vector<Algorithm> algorithms = {Algorithm::nsga2, Algorithm::nsga3,
                                               Algorithm::psmoa};
    struct Cell {
        Algorithm algorithm;
        std::uint64_t seed;
        FrontArchive archive;
    };
    std::vector<Cell> cells;
    for (const auto alg : algorithms)
        for (const auto seed : seeds) cells.push_back({alg, seed, {}});

    const PolicySpec no_policy;
    parallel_for(cells.size(), [&](std::size_t i) {
        const EvolutionConfig config = make_config(opt, cells[i].algorithm, cells[i].seed);
        RunResult r = run_algorithm(scenario, no_policy, std::nullopt, config);
        cells[i].archive = std::move(r.archive);
        cells[i].archive.label = std::string(to_string(cells[i].algorithm)) + "/seed" +
                                 std::to_string(cells[i].seed);
    });

    std::vector<FrontArchive> archives;
    archives.reserve(cells.size());
    for (const auto& c : cells) archives.push_back(c.archive);
    FrontArchive truth = build_truth_front(scenario, TruthBudget::merged_runs, archives);

    std::vector<FrontArchive> with_truth = archives;
    with_truth.push_back(truth);
    const auto bounds = objective_bounds(with_truth);
    FrontArchive truth_normalized = truth;
    truth_normalized.normalization = bounds;
    FrontArchive truth_raw = truth;  // no bounds: metrics stay in raw units

    // Normalized-space reference point: 1.1 x per-objective nadir of the
    // normalized truth front. Raw-space reference mirrors the construction.
    const auto truth_unit = detail::normalized_points(truth.points, bounds);
    std::vector<double> ref_norm(kObjectiveCount, 0.0), nadir_raw(kObjectiveCount,
                                                                  -std::numeric_limits<double>::infinity());
    for (const auto& p : truth_unit)
        for (int k = 0; k < kObjectiveCount; ++k) ref_norm[k] = std::max(ref_norm[k], p[k]);
    for (auto& v : ref_norm) v *= 1.1;
    for (const auto& p : truth.points)
        for (int k = 0; k < kObjectiveCount; ++k) nadir_raw[k] = std::max(nadir_raw[k], p[k]);
    std::vector<double> ref_raw(kObjectiveCount);
    for (int k = 0; k < kObjectiveCount; ++k)
        ref_raw[k] = nadir_raw[k] >= 0.0 ? 1.1 * nadir_raw[k] : nadir_raw[k] / 1.1;

    CompareOutcome out;
    for (const auto& c : cells) {
        MetricRow norm_row{std::string(to_string(c.algorithm)), c.seed, 0, 0, 0};
        FrontArchive unit_archive;
        unit_archive.points = detail::normalized_points(c.archive.points, bounds);
        norm_row.hv = hypervolume_clipped(unit_archive, ref_norm);
        norm_row.gd = generational_distance(c.archive, truth_normalized);
        norm_row.igd = inverted_generational_distance(c.archive, truth_normalized);
        out.normalized.push_back(norm_row);

        MetricRow raw_row = norm_row;
        raw_row.hv = hypervolume_clipped(c.archive, ref_raw);
        raw_row.gd = generational_distance(c.archive, truth_raw);
        raw_row.igd = inverted_generational_distance(c.archive, truth_raw);
        out.raw.push_back(raw_row);
    }

    auto medians_json = [&](const std::vector<MetricRow>& rows) {
        Json medians;
        for (const auto alg : algorithms) {
            std::vector<double> hv, gd, igd;
            for (const auto& r : rows)
                if (r.algorithm == to_string(alg)) {
                    hv.push_back(r.hv);
                    gd.push_back(r.gd);
                    igd.push_back(r.igd);
                }
            Json entry;
            entry["hv"] = median_of(hv);
            entry["gd"] = median_of(gd);
            entry["igd"] = median_of(igd);
            medians[to_string(alg)] = std::move(entry);
        }
        return medians;
    };

    const Json norm_medians = medians_json(out.normalized);
    auto ordering_string = [&](const std::string& metric, bool ascending) {
        std::vector<std::pair<double, std::string>> order;
        for (const auto alg : algorithms)
            order.push_back({norm_medians[to_string(alg)][metric].get<double>(),
                             std::string(to_string(alg))});
        std::sort(order.begin(), order.end());
        if (!ascending) std::reverse(order.begin(), order.end());
        std::string s;
        for (const auto& [v, name] : order) s += (s.empty() ? "" : ascending ? "<" : ">") + name;
        return s;
    };

    Json summary;
    summary["scale"] = opt.scenario_file.empty() ? opt.scale : "file";
    summary["scenario_hash"] = fnv1a_hex(scenario_to_string(scenario));
    summary["seeds"] = seeds;
    summary["algorithms"] = Json::array({"nsga2", "nsga3", "psmoa"});
    summary["truth_size"] = static_cast<int>(truth.points.size());
    Json normalized;
    normalized["medians"] = norm_medians;
    normalized["reference_point"] = ref_norm;
    summary["normalized"] = std::move(normalized);
    Json raw;
    raw["medians"] = medians_json(out.raw);
    raw["reference_point"] = ref_raw;
    summary["raw"] = std::move(raw);
    Json orderings;
    orderings["gd"] = ordering_string("gd", true);
    orderings["igd"] = ordering_string("igd", true);
    orderings["hv"] = ordering_string("hv", false);
    summary["orderings"] = std::move(orderings);

    auto med = [&](const char* alg, const char* metric) {
        return norm_medians[alg][metric].get<double>();
    };
    Json checks;
    checks["gd_psmoa_lt_nsga3"] = med("psmoa", "gd") < med("nsga3", "gd");
    checks["gd_psmoa_lt_nsga2"] = med("psmoa", "gd") < med("nsga2", "gd");
    checks["gd_nsga3_lt_nsga2"] = med("nsga3", "gd") < med("nsga2", "gd");
    checks["igd_psmoa_lowest"] = med("psmoa", "igd") < med("nsga3", "igd") &&
                                 med("psmoa", "igd") < med("nsga2", "igd");
    summary["checks"] = std::move(checks);
    out.summary = std::move(summary);
    return out;
}

inline std::string metrics_csv(const std::vector<MetricRow>& rows, const std::string& scenario_tag) {
    std::ostringstream oss;
    oss << "algorithm,scenario,seed,hv,gd,igd\n";
    for (const auto& r : rows)
        oss << r.algorithm << ',' << scenario_tag << ',' << r.seed << ','
            << ioutil::format_double(r.hv) << ',' << ioutil::format_double(r.gd) << ','
            << ioutil::format_double(r.igd) << "\n";
    return oss.str();
}

inline int cmd_compare(Options opt) {
    if (opt.seeds.empty()) {
        opt.seeds.resize(10);
        for (std::uint64_t s = 0; s < 10; ++s) opt.seeds[s] = s;
    }
    const Inputs in = load_inputs(opt, opt.scenario_seed);
    make_config(opt, Algorithm::psmoa, 0);  // validates pop/generations up front

    const std::vector<std::string> artifacts = {"manifest.json", "metrics.csv", "metrics_raw.csv",
                                                "summary.json"};
    Json params;
    params["population_size"] = opt.pop_size;
    params["generations"] = opt.generations;
    params["scale"] = opt.scenario_file.empty() ? opt.scale : "file";
    params["scenario_seed"] = opt.scenario_seed;
    atomic_write(fs::path(opt.out_dir) / "manifest.json",
                 build_manifest(opt, "compare", in, opt.seeds, artifacts, std::move(params)).dump(2) +
                     "\n");

    const CompareOutcome outcome = compare_algorithms(in.scenario, opt.seeds, opt);
    const std::string tag = opt.scenario_file.empty() ? opt.scale : "file";
    atomic_write(fs::path(opt.out_dir) / "metrics.csv", metrics_csv(outcome.normalized, tag));
    atomic_write(fs::path(opt.out_dir) / "metrics_raw.csv", metrics_csv(outcome.raw, tag));
    atomic_write(fs::path(opt.out_dir) / "summary.json", outcome.summary.dump(2) + "\n");
    return 0;
}

// ---- daycycle ----------------------------------------------------------------

inline int cmd_daycycle(Options opt) {
    if (opt.seeds.empty()) opt.seeds = {42};
    const std::uint64_t seed = opt.seeds.front();
    const Inputs in = load_inputs(opt, seed);
    EvolutionConfig config = make_config(opt, Algorithm::psmoa, seed);
    if (config.max_generations < 24)
        throw ConfigError("daycycle needs --generations >= 24");

    static constexpr const char* kSeriesNames[kObjectiveCount] = {"time", "cost", "popularity",
                                                                  "load"};
    std::vector<std::string> artifacts = {"manifest.json", "summary.json", "trace.jsonl"};
    for (int k = 0; k < kObjectiveCount; ++k) {
        artifacts.push_back(std::string("alpha_") + kSeriesNames[k] + ".csv");
        artifacts.push_back(std::string("perf_") + kSeriesNames[k] + ".csv");
    }
    Json params;
    params["population_size"] = opt.pop_size;
    params["generations"] = opt.generations;
    params["scale"] = opt.scenario_file.empty() ? opt.scale : "file";
    atomic_write(fs::path(opt.out_dir) / "manifest.json",
                 build_manifest(opt, "daycycle", in, opt.seeds, artifacts, std::move(params)).dump(2) +
                     "\n");

    const DaycycleResult day = run_daycycle(in.scenario, in.policy, config, seed);

    for (int k = 0; k < kObjectiveCount; ++k) {
        std::vector<std::pair<double, double>> alpha_rows, perf_rows;
        for (const auto& h : day.hours) {
            alpha_rows.push_back({static_cast<double>(h.hour), h.alpha[k]});
            perf_rows.push_back({static_cast<double>(h.hour), h.performance[k]});
        }
        atomic_write(fs::path(opt.out_dir) / (std::string("alpha_") + kSeriesNames[k] + ".csv"),
                     series_csv("hour", "alpha", alpha_rows));
        atomic_write(fs::path(opt.out_dir) / (std::string("perf_") + kSeriesNames[k] + ".csv"),
                     series_csv("hour", "percent_of_baseline", perf_rows));
    }
    atomic_write(fs::path(opt.out_dir) / "trace.jsonl",
                 trace_jsonl(day.run.trace, Algorithm::psmoa));

    double load_min = std::numeric_limits<double>::infinity();
    Json bands;
    for (int k = 0; k < kObjectiveCount; ++k) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& h : day.hours) {
            if (h.hour < kDaycycleWarmupHours) continue;
            lo = std::min(lo, h.performance[k]);
            hi = std::max(hi, h.performance[k]);
        }
        Json band;
        band["min"] = lo;
        band["max"] = hi;
        bands[kSeriesNames[k]] = std::move(band);
        if (k == kObjLoad) load_min = lo;
    }
    Json summary;
    summary["hours"] = static_cast<int>(day.hours.size());
    summary["policy_epochs"] = day.run.policy_epochs;
    summary["warmup_hours"] = kDaycycleWarmupHours;
    summary["series_files"] = std::vector<std::string>(artifacts.begin() + 3, artifacts.end());
    summary["load_perf_min_after_warmup"] = load_min;
    summary["perf_bands_after_warmup"] = std::move(bands);
    atomic_write(fs::path(opt.out_dir) / "summary.json", summary.dump(2) + "\n");
    return 0;
}

// ---- scale -------------------------------------------------------------------

// Median-of-five timing of one generation's worth of evaluations at the
// given scale (population evaluate + feasibility), isolating the O(m x n)
// evaluation cost the scaling check tracks.
inline double eval_seconds_per_generation(const Scenario& scenario, int pop_size) {
    EvolutionConfig config;
    config.population_size = pop_size;
    config.seed = 1;
    const EffectivePolicy eff = apply_conditional_rules(PolicySpec{}, scenario);
    Rng rng(1);
    auto population = initialize_population(scenario, config, eff, rng);
    std::vector<double> samples;
    volatile double sink = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        for (auto& ind : population) {
            const ObjectiveVector v = evaluate(ind.plan, scenario);
            const FeasibilityReport f = check_feasibility(ind.plan, scenario, eff);
            sink = sink + v.time + f.violation_score;
        }
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    (void)sink;
    return median_of(samples);
}

inline int cmd_scale(Options opt) {
    if (opt.seeds.empty()) opt.seeds = {42};
    const std::uint64_t seed = opt.seeds.front();
    const std::vector<Scale> scales = {Scale::small, Scale::medium, Scale::large};
    const std::vector<Algorithm> algorithms = {Algorithm::nsga2, Algorithm::nsga3,
                                               Algorithm::psmoa};

    // Scatter pairs highlighted per scale: columns are (algorithm, x, y).
    struct Pair {
        const char* name;
        int x, y;
        bool x_raw_popularity, y_raw_popularity;
    };
    const Pair pairs[3] = {{"cost_time", kObjCost, kObjTime, false, false},
                           {"popularity_load", kObjPopularity, kObjLoad, true, false},
                           {"load_cost", kObjLoad, kObjCost, false, false}};

    std::vector<std::string> artifacts = {"manifest.json", "summary.json"};
    std::vector<std::string> scatter_files;
    for (int s = 0; s < 3; ++s) {
        scatter_files.push_back(std::string("scatter_") + to_string(scales[s]) + "_" +
                                pairs[s].name + ".csv");
        artifacts.push_back(scatter_files.back());
    }

    Inputs manifest_inputs;  // scale study regenerates per scale; hash the small one
    Options manifest_opt = opt;
    manifest_inputs = load_inputs(manifest_opt, opt.scenario_seed);
    Json params;
    params["population_size"] = opt.pop_size;
    params["generations"] = opt.generations;
    params["scenario_seed"] = opt.scenario_seed;
    params["time_budget_seconds"] = opt.time_budget_seconds;
    atomic_write(fs::path(opt.out_dir) / "manifest.json",
                 build_manifest(opt, "scale", manifest_inputs, opt.seeds, artifacts,
                                std::move(params)).dump(2) +
                     "\n");

    struct Cell {
        int scale_idx;
        Algorithm algorithm;
        FrontArchive archive;
        double wall_seconds = 0.0;
    };
    std::vector<Scenario> scenarios;
    for (const auto scale : scales) scenarios.push_back(generate_scenario(scale, opt.scenario_seed));
    std::vector<Cell> cells;
    for (int s = 0; s < 3; ++s)
        for (const auto alg : algorithms) cells.push_back({s, alg, {}, 0.0});

    const PolicySpec no_policy;
    parallel_for(cells.size(), [&](std::size_t i) {
        Cell& cell = cells[i];
        const EvolutionConfig config = make_config(opt, cell.algorithm, seed);
        const auto start = std::chrono::steady_clock::now();
        RunResult r = run_algorithm(scenarios[cell.scale_idx], no_policy, std::nullopt, config);
        cell.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        cell.archive = std::move(r.archive);
    });

    for (int s = 0; s < 3; ++s) {
        std::ostringstream oss;
        oss << "algorithm," << (pairs[s].x_raw_popularity ? "popularity" : objective_name(pairs[s].x))
            << ',' << objective_name(pairs[s].y) << "\n";
        for (const auto& cell : cells) {
            if (cell.scale_idx != s) continue;
            for (const auto& p : cell.archive.points) {
                const double x = pairs[s].x_raw_popularity ? -p[pairs[s].x] : p[pairs[s].x];
                oss << to_string(cell.algorithm) << ',' << ioutil::format_double(x) << ','
                    << ioutil::format_double(p[pairs[s].y]) << "\n";
            }
        }
        atomic_write(fs::path(opt.out_dir) / scatter_files[s], oss.str());
    }

    Json eval_times;
    std::vector<double> log_nodes, log_seconds;
    bool within_budget = true;
    double max_wall = 0.0;
    for (int s = 0; s < 3; ++s) {
        const double secs = eval_seconds_per_generation(scenarios[s], opt.pop_size);
        eval_times[to_string(scales[s])] = secs;
        log_nodes.push_back(std::log(static_cast<double>(scenarios[s].nodes.size())));
        log_seconds.push_back(std::log(std::max(secs, 1e-12)));
    }
    for (const auto& cell : cells) {
        max_wall = std::max(max_wall, cell.wall_seconds);
        if (cell.wall_seconds > opt.time_budget_seconds) within_budget = false;
    }
    const double n = 3.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int s = 0; s < 3; ++s) {
        sx += log_nodes[s];
        sy += log_seconds[s];
        sxx += log_nodes[s] * log_nodes[s];
        sxy += log_nodes[s] * log_seconds[s];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    double cost_lo = std::numeric_limits<double>::infinity(), cost_hi = -cost_lo;
    for (const auto& cell : cells) {
        if (cell.scale_idx != 0 || cell.algorithm != Algorithm::psmoa) continue;
        for (const auto& p : cell.archive.points) {
            cost_lo = std::min(cost_lo, p[kObjCost]);
            cost_hi = std::max(cost_hi, p[kObjCost]);
        }
    }

    Json summary;
    summary["scales"] = Json::array({"small", "medium", "large"});
    summary["generation_budget"] = opt.generations;
    summary["population_size"] = opt.pop_size;
    summary["time_budget_seconds"] = opt.time_budget_seconds;
    summary["within_time_budget"] = within_budget;
    summary["max_run_wall_seconds"] = max_wall;
    summary["eval_seconds_per_generation"] = std::move(eval_times);
    summary["loglog_slope"] = slope;
    summary["psmoa_small_cost_range"] = Json::array({cost_lo, cost_hi});
    summary["scatter_files"] = scatter_files;
    atomic_write(fs::path(opt.out_dir) / "summary.json", summary.dump(2) + "\n");
    return 0;
}

}  // namespace psmoa::cli
